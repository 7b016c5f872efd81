//! Reference values, kept apart from the data file and the order formulas so
//! that both can be checked against them.

/// `(g, |Sp_2g(2)|)` for g = 2..10.
pub const SP_ORDERS: [(u32, &str); 9] = [
    (2, "720"),
    (3, "1451520"),
    (4, "47377612800"),
    (5, "24815256521932800"),
    (6, "208114637736580743168000"),
    (7, "27930968965434591767112450048000"),
    (8, "59980383884075203672726385914533642240000"),
    (9, "2060902435720151186326095525680721766346957783040000"),
    (10, "1132992015386677099994486205757869431795095310094129168384000000"),
];

/// The 26 sporadic groups by token, increasing order.
pub const SPORADIC_ORDERS: [(&str, &str); 26] = [
    ("M11", "7920"),
    ("M12", "95040"),
    ("J1", "175560"),
    ("M22", "443520"),
    ("J2", "604800"),
    ("M23", "10200960"),
    ("HS", "44352000"),
    ("J3", "50232960"),
    ("M24", "244823040"),
    ("McL", "898128000"),
    ("He", "4030387200"),
    ("Ru", "145926144000"),
    ("Suz", "448345497600"),
    ("O'N", "460815505920"),
    ("Co3", "495766656000"),
    ("Co2", "42305421312000"),
    ("Fi22", "64561751654400"),
    ("HN", "273030912000000"),
    ("Ly", "51765179004000000"),
    ("Th", "90745943887872000"),
    ("Fi23", "4089470473293004800"),
    ("Co1", "4157776806543360000"),
    ("J4", "86775571046077562880"),
    ("Fi24'", "1255205709190661721292800"),
    ("B", "4154781481226426191177580544000000"),
    ("M", "808017424794512875886459904961710757005754368000000000"),
];

/// `g(K)` for the sporadic groups with a centralizer entry.
pub const G_OF_K: [(&str, u32); 11] = [
    ("McL", 4),
    ("Suz", 5),
    ("Co3", 5),
    ("Co2", 5),
    ("Fi22", 5),
    ("Fi23", 6),
    ("Co1", 6),
    ("J4", 6),
    ("Fi24'", 7),
    ("B", 8),
    ("M", 10),
];
