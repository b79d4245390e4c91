//! Published reference values for regression checks.
//!
//! Correlation rows are `(n, p, r per property)` with properties in
//! [`Property::ALL`] order; `None` marks a published NA. Average rows are
//! `(n, p, [P member, P non-member, ⟨C⟩ member, ⟨C⟩ non-member, ratio
//! member, ratio non-member, Δ member, Δ non-member])`.

// published coefficients, some of which happen to resemble 1/π
#![allow(clippy::approx_constant)]

use crate::analysis::{Metric, Property, Sign};

pub type CorrelationRow = (usize, usize, [Option<f64>; 10]);
pub type AverageRow = (usize, usize, [Option<f64>; 8]);

/// Connected graphs on n = 3..=8 vertices, up to isomorphism.
pub const CONNECTED_COUNTS: [(usize, usize); 6] =
    [(3, 2), (4, 6), (5, 21), (6, 112), (7, 853), (8, 11117)];

/// The published bipartite and Eulerian correlations encode the boolean with
/// the opposite polarity (member = 0); compare those against `-r`.
pub const SIGN_FLIPPED: [Property; 2] = [Property::Bipartite, Property::Eulerian];

/// Whether `property`'s published correlation has the opposite sign
/// convention from [`crate::analysis::pearson`] on TRUE = 1.
pub fn sign_flipped(property: Property) -> bool {
    SIGN_FLIPPED.contains(&property)
}

pub fn correlation_rows(metric: Metric) -> &'static [CorrelationRow] {
    match metric {
        Metric::ExpC => EXP_C_CORRELATIONS,
        Metric::ProbCmax => PROB_CORRELATIONS,
        Metric::Ratio => RATIO_CORRELATIONS,
        Metric::DeltaRatio => DELTA_CORRELATIONS,
    }
}

/// Published r for one cell, already converted to the TRUE = 1 convention.
/// Outer `None`: no such row; inner `None`: published NA.
pub fn correlation(metric: Metric, property: Property, n: usize, p: usize) -> Option<Option<f64>> {
    let col = Property::ALL.iter().position(|&q| q == property)?;
    let row = correlation_rows(metric)
        .iter()
        .find(|r| r.0 == n && r.1 == p)?;
    Some(row.2[col].map(|r| if sign_flipped(property) { -r } else { r }))
}

/// Mean-correlation signs for n = 8 over p = 1..=3, columns ordered
/// ⟨C⟩, P(C_max), ratio, Δ ratio; rows in [`Property::ALL`] order.
pub const SIGN_GRID_N8: [[Sign; 4]; 10] = {
    use Sign::{Blank as O, Minus as M, Plus as P};
    [
        [P, M, P, M],
        [M, O, M, O],
        [P, M, P, M],
        [P, O, P, O],
        [O, M, O, M],
        [O, O, O, O],
        [M, O, O, O],
        [P, M, P, M],
        [O, O, O, O],
        [M, M, O, O],
    ]
};

/// Column order of [`SIGN_GRID_N8`].
pub const SIGN_GRID_METRICS: [Metric; 4] = [
    Metric::ExpC,
    Metric::ProbCmax,
    Metric::Ratio,
    Metric::DeltaRatio,
];

/// Published sign in the TRUE = 1 convention.
pub fn sign_n8(property: Property, metric: Metric) -> Sign {
    let row = Property::ALL
        .iter()
        .position(|&q| q == property)
        .expect("known property");
    let col = SIGN_GRID_METRICS
        .iter()
        .position(|&m| m == metric)
        .expect("known metric");
    match (SIGN_GRID_N8[row][col], sign_flipped(property)) {
        (Sign::Plus, true) => Sign::Minus,
        (Sign::Minus, true) => Sign::Plus,
        (s, _) => s,
    }
}

pub const PROB_CORRELATIONS: &[CorrelationRow] = &[
    (
        4,
        0,
        [
            Some(-0.781),
            Some(0.577),
            Some(-0.894),
            Some(-1.0),
            Some(-0.447),
            Some(0.0),
            Some(0.447),
            Some(-0.866),
            Some(-0.307),
            Some(-0.243),
        ],
    ),
    (
        4,
        1,
        [
            Some(0.363),
            Some(-0.535),
            Some(0.558),
            Some(0.398),
            Some(0.03),
            Some(0.437),
            Some(-0.085),
            Some(0.346),
            Some(0.507),
            Some(0.015),
        ],
    ),
    (
        4,
        2,
        [
            Some(0.561),
            Some(-0.83),
            Some(0.421),
            Some(0.247),
            Some(-0.512),
            Some(0.809),
            Some(-0.769),
            Some(0.354),
            Some(0.663),
            Some(-0.513),
        ],
    ),
    (
        4,
        3,
        [
            Some(0.462),
            Some(-0.786),
            Some(0.386),
            Some(0.41),
            Some(-0.222),
            Some(0.352),
            Some(-0.772),
            Some(0.355),
            Some(0.359),
            Some(-0.121),
        ],
    ),
    (
        5,
        0,
        [
            Some(0.505),
            Some(-0.287),
            Some(0.444),
            Some(-0.141),
            Some(-0.214),
            Some(0.45),
            Some(-0.152),
            Some(0.479),
            Some(0.767),
            Some(-0.417),
        ],
    ),
    (
        5,
        1,
        [
            Some(0.166),
            Some(-0.387),
            Some(0.243),
            Some(0.238),
            Some(-0.662),
            Some(0.661),
            Some(-0.11),
            Some(0.217),
            Some(0.531),
            Some(-0.619),
        ],
    ),
    (
        5,
        2,
        [
            Some(0.018),
            Some(-0.339),
            Some(-0.016),
            Some(0.047),
            Some(-0.447),
            Some(0.441),
            Some(-0.128),
            Some(0.004),
            Some(0.411),
            Some(-0.675),
        ],
    ),
    (
        5,
        3,
        [
            Some(0.071),
            Some(-0.233),
            Some(0.04),
            Some(-0.027),
            Some(-0.371),
            Some(0.277),
            Some(-0.127),
            Some(0.056),
            Some(0.296),
            Some(-0.619),
        ],
    ),
    (
        6,
        0,
        [
            Some(0.3),
            Some(-0.177),
            Some(0.209),
            Some(-0.027),
            Some(-0.371),
            Some(0.155),
            Some(-0.147),
            Some(0.301),
            Some(0.191),
            Some(-0.271),
        ],
    ),
    (
        6,
        1,
        [
            Some(-0.016),
            Some(-0.17),
            Some(0.043),
            Some(0.112),
            Some(-0.301),
            Some(0.222),
            Some(0.011),
            Some(0.012),
            Some(0.232),
            Some(-0.221),
        ],
    ),
    (
        6,
        2,
        [
            Some(-0.094),
            Some(-0.183),
            Some(-0.123),
            Some(-0.069),
            Some(-0.281),
            Some(0.252),
            Some(0.011),
            Some(-0.148),
            Some(0.272),
            Some(-0.324),
        ],
    ),
    (
        6,
        3,
        [
            Some(-0.059),
            Some(-0.131),
            Some(-0.126),
            Some(-0.153),
            Some(-0.271),
            Some(0.263),
            Some(-0.031),
            Some(-0.147),
            Some(0.209),
            Some(-0.441),
        ],
    ),
    (
        7,
        0,
        [
            Some(0.297),
            Some(-0.189),
            Some(0.287),
            Some(0.007),
            Some(-0.22),
            Some(0.015),
            Some(-0.133),
            Some(0.326),
            Some(0.043),
            Some(-0.208),
        ],
    ),
    (
        7,
        1,
        [
            Some(-0.11),
            Some(-0.027),
            Some(-0.037),
            Some(0.05),
            Some(-0.354),
            Some(0.216),
            Some(0.052),
            Some(-0.058),
            Some(0.202),
            Some(-0.224),
        ],
    ),
    (
        7,
        2,
        [
            Some(-0.14),
            Some(-0.012),
            Some(-0.167),
            Some(-0.058),
            Some(-0.298),
            Some(0.15),
            Some(0.053),
            Some(-0.158),
            Some(0.148),
            Some(-0.309),
        ],
    ),
    (
        7,
        3,
        [
            Some(-0.145),
            Some(0.024),
            Some(-0.207),
            Some(-0.1),
            Some(-0.252),
            Some(0.101),
            Some(0.066),
            Some(-0.201),
            Some(0.104),
            Some(-0.344),
        ],
    ),
    (
        8,
        0,
        [
            Some(0.256),
            Some(-0.192),
            Some(0.239),
            Some(0.028),
            Some(-0.131),
            Some(0.003),
            Some(-0.115),
            Some(0.286),
            Some(0.015),
            Some(-0.045),
        ],
    ),
    (
        8,
        1,
        [
            Some(-0.198),
            Some(0.056),
            Some(-0.124),
            Some(0.009),
            Some(-0.198),
            Some(0.029),
            Some(0.067),
            Some(-0.158),
            Some(0.056),
            Some(-0.101),
        ],
    ),
    (
        8,
        2,
        [
            Some(-0.194),
            Some(0.062),
            Some(-0.21),
            Some(-0.061),
            Some(-0.191),
            Some(0.047),
            Some(0.066),
            Some(-0.223),
            Some(0.057),
            Some(-0.178),
        ],
    ),
    (
        8,
        3,
        [
            Some(-0.201),
            Some(0.094),
            Some(-0.237),
            Some(-0.092),
            Some(-0.169),
            Some(0.046),
            Some(0.078),
            Some(-0.258),
            Some(0.04),
            Some(-0.214),
        ],
    ),
];

pub const EXP_C_CORRELATIONS: &[CorrelationRow] = &[
    (
        4,
        0,
        [
            Some(1.0),
            Some(-0.812),
            Some(0.908),
            Some(0.781),
            Some(0.07),
            Some(0.552),
            Some(-0.768),
            Some(0.947),
            Some(0.746),
            Some(-0.417),
        ],
    ),
    (
        4,
        1,
        [
            Some(0.983),
            Some(-0.786),
            Some(0.824),
            Some(0.672),
            Some(-0.101),
            Some(0.669),
            Some(-0.819),
            Some(0.876),
            Some(0.761),
            Some(-0.548),
        ],
    ),
    (
        4,
        2,
        [
            Some(0.799),
            Some(-0.639),
            Some(0.479),
            Some(0.355),
            Some(-0.481),
            Some(0.761),
            Some(-0.92),
            Some(0.583),
            Some(0.608),
            Some(-0.725),
        ],
    ),
    (
        4,
        3,
        [
            Some(0.783),
            Some(-0.586),
            Some(0.45),
            Some(0.338),
            Some(-0.448),
            Some(0.709),
            Some(-0.901),
            Some(0.579),
            Some(0.572),
            Some(-0.725),
        ],
    ),
    (
        5,
        0,
        [
            Some(1.0),
            Some(-0.673),
            Some(0.845),
            Some(0.558),
            Some(-0.247),
            Some(0.267),
            Some(-0.691),
            Some(0.951),
            Some(0.527),
            Some(-0.424),
        ],
    ),
    (
        5,
        1,
        [
            Some(0.989),
            Some(-0.671),
            Some(0.774),
            Some(0.495),
            Some(-0.255),
            Some(0.305),
            Some(-0.739),
            Some(0.908),
            Some(0.527),
            Some(-0.464),
        ],
    ),
    (
        5,
        2,
        [
            Some(0.889),
            Some(-0.641),
            Some(0.571),
            Some(0.256),
            Some(-0.118),
            Some(0.18),
            Some(-0.781),
            Some(0.73),
            Some(0.456),
            Some(-0.463),
        ],
    ),
    (
        5,
        3,
        [
            Some(0.844),
            Some(-0.564),
            Some(0.514),
            Some(0.234),
            Some(-0.087),
            Some(0.072),
            Some(-0.757),
            Some(0.679),
            Some(0.353),
            Some(-0.369),
        ],
    ),
    (
        6,
        0,
        [
            Some(1.0),
            Some(-0.673),
            Some(0.768),
            Some(0.466),
            Some(-0.052),
            Some(0.189),
            Some(-0.684),
            Some(0.933),
            Some(0.323),
            Some(-0.277),
        ],
    ),
    (
        6,
        1,
        [
            Some(0.991),
            Some(-0.676),
            Some(0.697),
            Some(0.401),
            Some(-0.073),
            Some(0.221),
            Some(-0.729),
            Some(0.886),
            Some(0.319),
            Some(-0.305),
        ],
    ),
    (
        6,
        2,
        [
            Some(0.926),
            Some(-0.662),
            Some(0.544),
            Some(0.25),
            Some(-0.087),
            Some(0.256),
            Some(-0.75),
            Some(0.749),
            Some(0.312),
            Some(-0.351),
        ],
    ),
    (
        6,
        3,
        [
            Some(0.875),
            Some(-0.618),
            Some(0.468),
            Some(0.178),
            Some(-0.098),
            Some(0.264),
            Some(-0.747),
            Some(0.676),
            Some(0.274),
            Some(-0.372),
        ],
    ),
    (
        7,
        0,
        [
            Some(1.0),
            Some(-0.683),
            Some(0.722),
            Some(0.329),
            Some(-0.079),
            Some(0.056),
            Some(-0.655),
            Some(0.924),
            Some(0.147),
            Some(-0.225),
        ],
    ),
    (
        7,
        1,
        [
            Some(0.994),
            Some(-0.695),
            Some(0.663),
            Some(0.295),
            Some(-0.081),
            Some(0.057),
            Some(-0.698),
            Some(0.884),
            Some(0.142),
            Some(-0.227),
        ],
    ),
    (
        7,
        2,
        [
            Some(0.953),
            Some(-0.684),
            Some(0.558),
            Some(0.214),
            Some(-0.074),
            Some(0.044),
            Some(-0.711),
            Some(0.79),
            Some(0.132),
            Some(-0.245),
        ],
    ),
    (
        7,
        3,
        [
            Some(0.916),
            Some(-0.651),
            Some(0.5),
            Some(0.169),
            Some(-0.067),
            Some(0.03),
            Some(-0.697),
            Some(0.731),
            Some(0.116),
            Some(-0.252),
        ],
    ),
    (
        8,
        0,
        [
            Some(1.0),
            Some(-0.691),
            Some(0.682),
            Some(0.222),
            Some(-0.021),
            Some(0.024),
            Some(-0.603),
            Some(0.913),
            Some(0.05),
            Some(-0.123),
        ],
    ),
    (
        8,
        1,
        [
            Some(0.995),
            Some(-0.707),
            Some(0.629),
            Some(0.203),
            Some(-0.024),
            Some(0.028),
            Some(-0.646),
            Some(0.876),
            Some(0.048),
            Some(-0.117),
        ],
    ),
    (
        8,
        2,
        [
            Some(0.967),
            Some(-0.698),
            Some(0.55),
            Some(0.158),
            Some(-0.026),
            Some(0.034),
            Some(-0.652),
            Some(0.803),
            Some(0.046),
            Some(-0.136),
        ],
    ),
    (
        8,
        3,
        [
            Some(0.936),
            Some(-0.671),
            Some(0.507),
            Some(0.125),
            Some(-0.028),
            Some(0.04),
            Some(-0.64),
            Some(0.752),
            Some(0.042),
            Some(-0.153),
        ],
    ),
];

pub const RATIO_CORRELATIONS: &[CorrelationRow] = &[
    (
        4,
        0,
        [
            Some(0.857),
            Some(-0.74),
            Some(0.988),
            Some(0.926),
            Some(0.414),
            Some(0.252),
            Some(-0.446),
            Some(0.926),
            Some(0.602),
            Some(0.017),
        ],
    ),
    (
        4,
        1,
        [
            Some(0.635),
            Some(-0.576),
            Some(0.886),
            Some(0.819),
            Some(0.515),
            Some(0.125),
            Some(-0.133),
            Some(0.753),
            Some(0.491),
            Some(0.206),
        ],
    ),
    (
        4,
        2,
        [
            Some(0.747),
            Some(-0.8),
            Some(0.552),
            Some(0.44),
            Some(-0.512),
            Some(0.81),
            Some(-0.882),
            Some(0.525),
            Some(0.63),
            Some(-0.52),
        ],
    ),
    (
        4,
        3,
        [
            Some(0.466),
            Some(-0.785),
            Some(0.389),
            Some(0.416),
            Some(-0.219),
            Some(0.347),
            Some(-0.777),
            Some(0.36),
            Some(0.356),
            Some(-0.119),
        ],
    ),
    (
        5,
        0,
        [
            Some(0.77),
            Some(-0.592),
            Some(0.856),
            Some(0.744),
            Some(-0.414),
            Some(0.389),
            Some(-0.397),
            Some(0.849),
            Some(0.499),
            Some(-0.421),
        ],
    ),
    (
        5,
        1,
        [
            Some(0.428),
            Some(-0.4),
            Some(0.569),
            Some(0.599),
            Some(-0.51),
            Some(0.549),
            Some(-0.164),
            Some(0.546),
            Some(0.421),
            Some(-0.463),
        ],
    ),
    (
        5,
        2,
        [
            Some(0.125),
            Some(-0.39),
            Some(0.152),
            Some(0.091),
            Some(-0.335),
            Some(0.483),
            Some(-0.154),
            Some(0.147),
            Some(0.424),
            Some(-0.648),
        ],
    ),
    (
        5,
        3,
        [
            Some(0.138),
            Some(-0.35),
            Some(0.103),
            Some(0.06),
            Some(-0.373),
            Some(0.318),
            Some(-0.206),
            Some(0.116),
            Some(0.329),
            Some(-0.666),
        ],
    ),
    (
        6,
        0,
        [
            Some(0.72),
            Some(-0.53),
            Some(0.8),
            Some(0.681),
            Some(-0.04),
            Some(0.061),
            Some(-0.35),
            Some(0.822),
            Some(0.246),
            Some(-0.116),
        ],
    ),
    (
        6,
        1,
        [
            Some(0.374),
            Some(-0.314),
            Some(0.539),
            Some(0.541),
            Some(-0.066),
            Some(0.051),
            Some(-0.103),
            Some(0.515),
            Some(0.192),
            Some(-0.071),
        ],
    ),
    (
        6,
        2,
        [
            Some(0.166),
            Some(-0.3),
            Some(0.218),
            Some(0.234),
            Some(-0.133),
            Some(0.14),
            Some(-0.05),
            Some(0.193),
            Some(0.258),
            Some(-0.212),
        ],
    ),
    (
        6,
        3,
        [
            Some(0.042),
            Some(-0.231),
            Some(-0.035),
            Some(-0.057),
            Some(-0.256),
            Some(0.298),
            Some(-0.099),
            Some(-0.033),
            Some(0.234),
            Some(-0.42),
        ],
    ),
    (
        7,
        0,
        [
            Some(0.687),
            Some(-0.489),
            Some(0.727),
            Some(0.494),
            Some(-0.12),
            Some(0.074),
            Some(-0.337),
            Some(0.794),
            Some(0.127),
            Some(-0.158),
        ],
    ),
    (
        7,
        1,
        [
            Some(0.315),
            Some(-0.258),
            Some(0.442),
            Some(0.387),
            Some(-0.14),
            Some(0.112),
            Some(-0.113),
            Some(0.462),
            Some(0.107),
            Some(-0.116),
        ],
    ),
    (
        7,
        2,
        [
            Some(0.143),
            Some(-0.21),
            Some(0.182),
            Some(0.207),
            Some(-0.164),
            Some(0.134),
            Some(-0.063),
            Some(0.206),
            Some(0.13),
            Some(-0.202),
        ],
    ),
    (
        7,
        3,
        [
            Some(0.035),
            Some(-0.128),
            Some(-0.015),
            Some(0.028),
            Some(-0.182),
            Some(0.117),
            Some(-0.023),
            Some(0.01),
            Some(0.112),
            Some(-0.305),
        ],
    ),
    (
        8,
        0,
        [
            Some(0.671),
            Some(-0.469),
            Some(0.666),
            Some(0.347),
            Some(-0.032),
            Some(-0.007),
            Some(-0.314),
            Some(0.778),
            Some(0.039),
            Some(-0.034),
        ],
    ),
    (
        8,
        1,
        [
            Some(0.299),
            Some(-0.247),
            Some(0.383),
            Some(0.276),
            Some(-0.042),
            Some(-0.009),
            Some(-0.129),
            Some(0.443),
            Some(0.031),
            Some(0.024),
        ],
    ),
    (
        8,
        2,
        [
            Some(0.157),
            Some(-0.197),
            Some(0.163),
            Some(0.175),
            Some(-0.063),
            Some(0.004),
            Some(-0.082),
            Some(0.227),
            Some(0.037),
            Some(-0.015),
        ],
    ),
    (
        8,
        3,
        [
            Some(0.051),
            Some(-0.115),
            Some(-0.002),
            Some(0.043),
            Some(-0.09),
            Some(0.031),
            Some(-0.037),
            Some(0.043),
            Some(0.039),
            Some(-0.107),
        ],
    ),
];

pub const DELTA_CORRELATIONS: &[CorrelationRow] = &[
    (
        4,
        1,
        [
            Some(0.295),
            Some(-0.362),
            Some(0.619),
            Some(0.513),
            Some(0.451),
            Some(0.079),
            Some(0.192),
            Some(0.418),
            Some(0.368),
            Some(0.288),
        ],
    ),
    (
        4,
        2,
        [
            Some(0.701),
            Some(-0.766),
            Some(0.412),
            Some(0.192),
            Some(-0.567),
            Some(0.897),
            Some(-0.901),
            Some(0.465),
            Some(0.742),
            Some(-0.809),
        ],
    ),
    (
        4,
        3,
        [
            Some(0.362),
            Some(-0.979),
            Some(0.483),
            Some(0.483),
            None,
            None,
            Some(-0.682),
            Some(0.362),
            Some(0.511),
            Some(0.422),
        ],
    ),
    (
        5,
        1,
        [
            Some(0.175),
            Some(-0.276),
            Some(0.305),
            Some(0.306),
            Some(-0.612),
            Some(0.645),
            Some(-0.001),
            Some(0.271),
            Some(0.487),
            Some(-0.495),
        ],
    ),
    (
        5,
        2,
        [
            Some(0.015),
            Some(-0.347),
            Some(-0.045),
            Some(-0.14),
            Some(-0.49),
            Some(0.571),
            Some(-0.14),
            Some(-0.011),
            Some(0.507),
            Some(-0.71),
        ],
    ),
    (
        5,
        3,
        [
            Some(0.204),
            Some(-0.251),
            Some(0.177),
            Some(0.095),
            Some(-0.423),
            None,
            Some(-0.114),
            Some(0.158),
            Some(0.7),
            Some(-0.623),
        ],
    ),
    (
        6,
        1,
        [
            Some(-0.045),
            Some(-0.053),
            Some(0.139),
            Some(0.209),
            Some(-0.11),
            Some(0.112),
            Some(0.149),
            Some(0.077),
            Some(0.2),
            Some(-0.078),
        ],
    ),
    (
        6,
        2,
        [
            Some(-0.153),
            Some(-0.124),
            Some(-0.24),
            Some(-0.203),
            Some(-0.228),
            Some(0.31),
            Some(0.045),
            Some(-0.252),
            Some(0.395),
            Some(-0.318),
        ],
    ),
    (
        6,
        3,
        [
            Some(-0.003),
            Some(-0.152),
            Some(-0.139),
            Some(-0.206),
            Some(-0.393),
            Some(0.438),
            Some(-0.099),
            Some(-0.119),
            Some(0.337),
            Some(-0.545),
        ],
    ),
    (
        7,
        1,
        [
            Some(-0.157),
            Some(0.045),
            Some(0.018),
            Some(0.122),
            Some(-0.182),
            Some(0.18),
            Some(0.148),
            Some(-0.025),
            Some(0.16),
            Some(-0.09),
        ],
    ),
    (
        7,
        2,
        [
            Some(-0.235),
            Some(0.012),
            Some(-0.324),
            Some(-0.146),
            Some(-0.244),
            Some(0.226),
            Some(0.08),
            Some(-0.315),
            Some(0.235),
            Some(-0.237),
        ],
    ),
    (
        7,
        3,
        [
            Some(-0.114),
            Some(0.029),
            Some(-0.21),
            Some(-0.159),
            Some(-0.308),
            Some(0.211),
            Some(0.069),
            Some(-0.208),
            Some(0.176),
            Some(-0.392),
        ],
    ),
    (
        8,
        1,
        [
            Some(-0.237),
            Some(0.09),
            Some(-0.078),
            Some(0.078),
            Some(-0.057),
            Some(0.007),
            Some(0.124),
            Some(-0.104),
            Some(0.041),
            Some(0.053),
        ],
    ),
    (
        8,
        2,
        [
            Some(-0.259),
            Some(0.048),
            Some(-0.389),
            Some(-0.091),
            Some(-0.102),
            Some(0.045),
            Some(0.077),
            Some(-0.361),
            Some(0.079),
            Some(-0.077),
        ],
    ),
    (
        8,
        3,
        [
            Some(-0.187),
            Some(0.107),
            Some(-0.279),
            Some(-0.159),
            Some(-0.166),
            Some(0.082),
            Some(0.088),
            Some(-0.302),
            Some(0.083),
            Some(-0.226),
        ],
    ),
];

pub const BIPARTITE_AVERAGES: &[AverageRow] = &[
    (
        4,
        0,
        [
            Some(0.125),
            Some(0.0625),
            Some(1.667),
            Some(2.5),
            Some(0.5),
            Some(0.681),
            None,
            None,
        ],
    ),
    (
        4,
        1,
        [
            Some(0.481),
            Some(0.602),
            Some(2.566),
            Some(3.216),
            Some(0.772),
            Some(0.879),
            Some(0.544),
            Some(0.634),
        ],
    ),
    (
        4,
        2,
        [
            Some(0.889),
            Some(0.928),
            Some(3.18),
            Some(3.586),
            Some(0.949),
            Some(0.978),
            Some(0.762),
            Some(0.825),
        ],
    ),
    (
        4,
        3,
        [
            Some(0.993),
            Some(0.999),
            Some(3.326),
            Some(3.666),
            Some(0.998),
            Some(1.0),
            Some(0.973),
            Some(0.994),
        ],
    ),
    (
        5,
        0,
        [
            Some(0.0625),
            Some(0.049),
            Some(2.3),
            Some(3.344),
            Some(0.5),
            Some(0.658),
            None,
            None,
        ],
    ),
    (
        5,
        1,
        [
            Some(0.368),
            Some(0.495),
            Some(3.436),
            Some(4.323),
            Some(0.75),
            Some(0.857),
            Some(0.5),
            Some(0.605),
        ],
    ),
    (
        5,
        2,
        [
            Some(0.746),
            Some(0.725),
            Some(4.222),
            Some(4.685),
            Some(0.918),
            Some(0.928),
            Some(0.661),
            Some(0.587),
        ],
    ),
    (
        5,
        3,
        [
            Some(0.907),
            Some(0.9),
            Some(4.47),
            Some(4.926),
            Some(0.97),
            Some(0.974),
            Some(0.731),
            Some(0.744),
        ],
    ),
    (
        6,
        0,
        [
            Some(0.031),
            Some(0.028),
            Some(3.118),
            Some(4.447),
            Some(0.5),
            Some(0.644),
            None,
            None,
        ],
    ),
    (
        6,
        1,
        [
            Some(0.26),
            Some(0.311),
            Some(4.542),
            Some(5.672),
            Some(0.733),
            Some(0.826),
            Some(0.465),
            Some(0.522),
        ],
    ),
    (
        6,
        2,
        [
            Some(0.586),
            Some(0.549),
            Some(5.449),
            Some(6.179),
            Some(0.873),
            Some(0.9),
            Some(0.519),
            Some(0.442),
        ],
    ),
    (
        6,
        3,
        [
            Some(0.818),
            Some(0.744),
            Some(5.949),
            Some(6.506),
            Some(0.951),
            Some(0.946),
            Some(0.62),
            Some(0.511),
        ],
    ),
    (
        7,
        0,
        [
            Some(0.016),
            Some(0.016),
            Some(3.875),
            Some(5.693),
            Some(0.067),
            Some(0.074),
            None,
            None,
        ],
    ),
    (
        7,
        1,
        [
            Some(0.182),
            Some(0.213),
            Some(5.554),
            Some(7.187),
            Some(0.438),
            Some(0.482),
            Some(0.182),
            Some(0.213),
        ],
    ),
    (
        7,
        2,
        [
            Some(0.469),
            Some(0.424),
            Some(6.598),
            Some(7.827),
            Some(0.851),
            Some(0.886),
            Some(0.464),
            Some(0.396),
        ],
    ),
    (
        7,
        3,
        [
            Some(0.691),
            Some(0.605),
            Some(7.201),
            Some(8.225),
            Some(0.927),
            Some(0.93),
            Some(0.519),
            Some(0.409),
        ],
    ),
    (
        8,
        0,
        [
            Some(0.008),
            Some(0.011),
            Some(4.797),
            Some(7.246),
            Some(0.5),
            Some(0.646),
            None,
            None,
        ],
    ),
    (
        8,
        1,
        [
            Some(0.133),
            Some(0.139),
            Some(6.773),
            Some(9.022),
            Some(0.71),
            Some(0.808),
            Some(0.42),
            Some(0.462),
        ],
    ),
    (
        8,
        2,
        [
            Some(0.385),
            Some(0.317),
            Some(7.983),
            Some(9.801),
            Some(0.832),
            Some(0.877),
            Some(0.42),
            Some(0.367),
        ],
    ),
    (
        8,
        3,
        [
            Some(0.606),
            Some(0.482),
            Some(8.762),
            Some(10.273),
            Some(0.911),
            Some(0.92),
            Some(0.467),
            Some(0.35),
        ],
    ),
];

pub const EULERIAN_AVERAGES: &[AverageRow] = &[
    (
        4,
        0,
        [
            Some(0.125),
            Some(0.088),
            Some(2.0),
            Some(2.1),
            Some(0.5),
            Some(0.608),
            None,
            None,
        ],
    ),
    (
        4,
        1,
        [
            Some(0.531),
            Some(0.543),
            Some(3.0),
            Some(2.869),
            Some(0.75),
            Some(0.841),
            Some(0.5),
            Some(0.607),
        ],
    ),
    (
        4,
        2,
        [
            Some(1.0),
            Some(0.89),
            Some(4.0),
            Some(3.26),
            Some(1.0),
            Some(0.956),
            Some(1.0),
            Some(0.752),
        ],
    ),
    (
        4,
        3,
        [
            Some(1.0),
            Some(0.995),
            Some(4.0),
            Some(3.395),
            Some(1.0),
            Some(0.998),
            Some(1.0),
            Some(0.98),
        ],
    ),
    (
        5,
        0,
        [
            Some(0.07),
            Some(0.048),
            Some(3.5),
            Some(3.0),
            Some(0.698),
            Some(0.602),
            None,
            None,
        ],
    ),
    (
        5,
        1,
        [
            Some(0.775),
            Some(0.392),
            Some(4.513),
            Some(4.017),
            Some(0.912),
            Some(0.813),
            Some(0.764),
            Some(0.537),
        ],
    ),
    (
        5,
        2,
        [
            Some(0.913),
            Some(0.687),
            Some(4.762),
            Some(4.531),
            Some(0.96),
            Some(0.918),
            Some(0.831),
            Some(0.551),
        ],
    ),
    (
        5,
        3,
        [
            Some(0.99),
            Some(0.881),
            Some(4.965),
            Some(4.782),
            Some(0.994),
            Some(0.968),
            Some(0.963),
            Some(0.689),
        ],
    ),
    (
        6,
        0,
        [
            Some(0.078),
            Some(0.025),
            Some(4.438),
            Some(4.231),
            Some(0.633),
            Some(0.621),
            None,
            None,
        ],
    ),
    (
        6,
        1,
        [
            Some(0.481),
            Some(0.29),
            Some(5.766),
            Some(5.48),
            Some(0.827),
            Some(0.811),
            Some(0.552),
            Some(0.51),
        ],
    ),
    (
        6,
        2,
        [
            Some(0.749),
            Some(0.539),
            Some(6.397),
            Some(6.043),
            Some(0.915),
            Some(0.894),
            Some(0.566),
            Some(0.445),
        ],
    ),
    (
        6,
        3,
        [
            Some(0.925),
            Some(0.742),
            Some(6.816),
            Some(6.391),
            Some(0.976),
            Some(0.945),
            Some(0.796),
            Some(0.507),
        ],
    ),
    (
        7,
        0,
        [
            Some(0.041),
            Some(0.015),
            Some(6.054),
            Some(5.578),
            Some(0.075),
            Some(0.074),
            None,
            None,
        ],
    ),
    (
        7,
        1,
        [
            Some(0.431),
            Some(0.201),
            Some(7.57),
            Some(7.081),
            Some(0.843),
            Some(0.807),
            Some(0.569),
            Some(0.475),
        ],
    ),
    (
        7,
        2,
        [
            Some(0.666),
            Some(0.415),
            Some(8.203),
            Some(7.744),
            Some(0.912),
            Some(0.883),
            Some(0.518),
            Some(0.394),
        ],
    ),
    (
        7,
        3,
        [
            Some(0.833),
            Some(0.6),
            Some(8.597),
            Some(8.153),
            Some(0.955),
            Some(0.929),
            Some(0.609),
            Some(0.406),
        ],
    ),
    (
        8,
        0,
        [
            Some(0.027),
            Some(0.011),
            Some(7.438),
            Some(7.202),
            Some(0.656),
            Some(0.643),
            None,
            None,
        ],
    ),
    (
        8,
        1,
        [
            Some(0.276),
            Some(0.137),
            Some(9.245),
            Some(8.981),
            Some(0.82),
            Some(0.806),
            Some(0.491),
            Some(0.461),
        ],
    ),
    (
        8,
        2,
        [
            Some(0.525),
            Some(0.315),
            Some(10.067),
            Some(9.766),
            Some(0.893),
            Some(0.876),
            Some(0.426),
            Some(0.366),
        ],
    ),
    (
        8,
        3,
        [
            Some(0.708),
            Some(0.48),
            Some(10.58),
            Some(10.242),
            Some(0.937),
            Some(0.919),
            Some(0.472),
            Some(0.35),
        ],
    ),
];
