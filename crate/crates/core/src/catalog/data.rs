use super::{Entry, Expected, Extension, FamilyData, H2tm, Target};

const NONE: &[&str] = &[];

const fn lie_low(h2tm: usize, h2t: usize, ann: usize) -> Expected {
    Expected {
        h2tm: Some(H2tm::Dim(h2tm)),
        h2t: Some(h2t),
        h2tm_gens: NONE,
        h2t_extra: NONE,
        tortkara: true,
        malcev: Some(true),
        metabelian: Some(true),
        nilpotent: Some(true),
        ann_dim: Some(ann),
    }
}

const fn with_gens(mut e: Expected, tm: &'static [&'static str], extra: &'static [&'static str]) -> Expected {
    e.h2tm_gens = tm;
    e.h2t_extra = extra;
    e
}

const fn six(metabelian: bool, ann: usize) -> Expected {
    Expected {
        h2tm: None,
        h2t: None,
        h2tm_gens: NONE,
        h2t_extra: NONE,
        tortkara: true,
        malcev: Some(false),
        metabelian: Some(metabelian),
        nilpotent: Some(true),
        ann_dim: Some(ann),
    }
}

// dim Ann jumps to 2 where one cocycle term vanishes (alpha = 0 or -1)
const PARAMETRIC_SIX: Expected = Expected {
    ann_dim: None,
    ..six(true, 1)
};

const TORTKARA_ONLY: Expected = Expected {
    h2tm: None,
    h2t: None,
    h2tm_gens: NONE,
    h2t_extra: NONE,
    tortkara: true,
    malcev: None,
    metabelian: None,
    nilpotent: None,
    ann_dim: None,
};

const fn entry(name: &'static str, display: &'static str, dim: usize, table: &'static str, expected: Expected) -> Entry {
    Entry {
        name,
        display,
        dim,
        table,
        params: NONE,
        expected,
        extension: None,
        family: None,
        identity_params: &[],
        note: None,
    }
}

const fn ext(base: &'static str, cocycles: &'static [&'static str]) -> Option<Extension> {
    Some(Extension { base, cocycles })
}

const fn t(label: &'static str, entries: &'static [(i64, usize, usize)], expected: &'static str) -> Target {
    Target { label, entries, expected }
}

const T4_02_FAMILY: FamilyData = FamilyData {
    rows: &[
        &["x", "0", "0", "0"],
        &["z", "y", "0", "0"],
        &["u", "v", "x*y", "0"],
        &["h", "g", "x*v", "x^2*y"],
    ],
    det: "x^4*y^3",
    generic: &[((1, 4), "a1"), ((2, 3), "a2"), ((2, 4), "a3")],
    targets: &[
        t("a1*", &[(1, 1, 4)], "(a1*x + a3*z)*x^2*y"),
        t("a2*", &[(1, 2, 3)], "(a2*y + a3*v)*x*y"),
        t("a3*", &[(1, 2, 4)], "a3*x^2*y^2"),
    ],
};

const T5_02_FAMILY: FamilyData = FamilyData {
    rows: &[
        &["x", "0", "0", "0", "0"],
        &["f", "y", "0", "0", "0"],
        &["u", "v", "x*y", "0", "0"],
        &["h", "r", "x*v", "x^2*y", "l"],
        &["t", "g", "0", "0", "z"],
    ],
    det: "x^4*y^3*z",
    generic: &[
        ((1, 4), "a1"),
        ((1, 5), "a2"),
        ((2, 3), "a3"),
        ((2, 5), "a4"),
        ((3, 5), "a5"),
        ((2, 4), "a6"),
        ((4, 5), "a7"),
    ],
    targets: &[
        t("a1*", &[(1, 1, 4)], "a1*x^3*y + a6*f*x^2*y - a7*t*x^2*y"),
        t("a2*", &[(1, 1, 5)], "a1*x*l + a2*x*z + a4*f*z + a5*u*z + a6*f*l + a7*(h*z - t*l)"),
        t("a3*", &[(1, 2, 3)], "a3*x*y^2 - a5*g*x*y + a6*v*x*y - a7*g*v*x"),
        t("a4*", &[(1, 2, 5)], "a4*y*z + a5*v*z + a6*y*l + a7*(r*z - g*l)"),
        t("a5*", &[(1, 3, 5)], "a5*x*y*z + a7*v*x*z"),
        t("a6*", &[(1, 2, 4)], "a6*x^2*y^2 - a7*g*x^2*y"),
        t("a7*", &[(1, 4, 5)], "a7*x^2*y*z"),
    ],
};

const T5_04_FAMILY: FamilyData = FamilyData {
    rows: &[
        &["x", "y", "0", "0", "0"],
        &["v", "z", "0", "0", "0"],
        &["u", "h", "x*z - y*v", "0", "0"],
        &["l", "r", "x*h - y*u", "x*(x*z - y*v)", "y*(x*z - y*v)"],
        &["t", "g", "v*h - z*u", "v*(x*z - y*v)", "z*(x*z - y*v)"],
    ],
    det: "(x*z - y*v)^5",
    generic: &[((1, 4), "a1"), ((2, 5), "a2"), ((1, 5), "a3 + a4"), ((2, 4), "a3")],
    targets: &[
        t("a1*", &[(1, 1, 4)], "(x*z - y*v)*(a1*x^2 + a2*v^2 + (2*a3 + a4)*x*v)"),
        t("a2*", &[(1, 2, 5)], "(x*z - y*v)*(a1*y^2 + a2*z^2 + (2*a3 + a4)*y*z)"),
        t("a3*", &[(1, 2, 4)], "(x*z - y*v)*(a1*x*y + a2*v*z + (a3 + a4)*y*v + a3*x*z)"),
        t("a4*", &[(1, 1, 5), (-1, 2, 4)], "a4*(x*z - y*v)^2"),
    ],
};

const T5_06_FAMILY: FamilyData = FamilyData {
    rows: &[
        &["x", "p", "0", "0", "0"],
        &["0", "y", "0", "0", "0"],
        &["z", "t", "x*y", "-p*y", "0"],
        &["q", "r", "0", "y^2", "0"],
        &["s", "h", "x*r - y*z - p*q", "f", "x*y^2"],
    ],
    det: "x^3*y^6",
    generic: &[
        ((1, 3), "a1"),
        ((1, 4), "a2"),
        ((2, 4), "a3"),
        ((2, 5), "a4"),
        ((3, 4), "a5"),
        ((1, 5), "a6"),
        ((4, 5), "a7"),
    ],
    targets: &[
        t("a1*", &[(1, 1, 3)], "x*y*(a1*x - a5*q) + (a6*x + a7*q)*(r*x - y*z - p*q)"),
        t(
            "a2*",
            &[(1, 1, 4), (-1, 2, 3)],
            "-2*a1*p*x*y + a2*x*y^2 + a4*y*(p*q - r*x + y*z) + a5*y*(p*q + r*x + y*z) \
             + a6*(p*(p*q - r*x + y*z) + f*x) + a7*(r*(p*q - r*x + y*z) - s*y^2 + f*q)",
        ),
        t(
            "a3*",
            &[(1, 2, 4)],
            "y*(-a1*p^2 + a2*p*y + a3*y^2 + a4*f) + a5*y*(p*r + y*t) + a6*f*p + a7*(f*r - y^2*h)",
        ),
        t("a4*", &[(1, 2, 5)], "x*y^2*(a4*y + a6*p + a7*r)"),
        t("a5*", &[(1, 3, 4)], "y^2*(a5*x*y + a7*(p*q - r*x + y*z))"),
        t("a6*", &[(1, 1, 5)], "x*y^2*(a6*x + a7*q)"),
        t("a7*", &[(1, 4, 5)], "a7*y^4*x"),
    ],
};

const T5_08_FAMILY: FamilyData = FamilyData {
    rows: &[
        &["x", "0", "0", "0", "0"],
        &["z", "y", "0", "0", "0"],
        &["t", "p", "x*y", "0", "0"],
        &["q", "r", "x*p", "x^2*y", "0"],
        &["h", "s", "x*r", "x^2*p", "x^3*y"],
    ],
    det: "x^7*y^4",
    generic: &[((1, 5), "a1"), ((2, 3), "a2"), ((2, 4), "a3"), ((2, 5), "a4")],
    targets: &[
        t("a1*", &[(1, 1, 5)], "x^3*y*(a1*x + a4*z)"),
        t("a2*", &[(1, 2, 3)], "x*y*(a2*y + a3*p + a4*r)"),
        t("a3*", &[(1, 2, 4)], "x^2*y*(a3*y + a4*p)"),
        t("a4*", &[(1, 2, 5)], "a4*x^3*y^2"),
    ],
};

const T5_09_FAMILY: FamilyData = FamilyData {
    rows: &[
        &["x", "0", "0", "0", "0"],
        &["y", "x^2", "0", "0", "0"],
        &["z", "t", "x^3", "0", "0"],
        &["p", "q", "x*t", "x^4", "0"],
        &["r", "s", "-x^2*z + x*q + y*t", "x^3*y + x^2*t", "x^5"],
    ],
    det: "x^15",
    generic: &[((1, 4), "a1"), ((1, 5), "a2 + a3"), ((2, 4), "a2"), ((2, 5), "a4")],
    targets: &[
        t(
            "a1*",
            &[(1, 1, 4), (-1, 2, 3)],
            "x^3*(a1*x^2 + 2*a2*x*y + a3*(x*y + t) + a4*(y^2 + x*z - q))",
        ),
        t("a2*", &[(1, 2, 4)], "x^4*(a2*x^2 + a4*(x*y + t))"),
        t("a3*", &[(1, 1, 5), (-1, 2, 4)], "x^4*(a3*x^2 - a4*t)"),
        t("a4*", &[(1, 2, 5)], "a4*x^7"),
    ],
};

const T5_10_FAMILY: FamilyData = FamilyData {
    rows: &[
        &["x", "0", "0", "0", "0"],
        &["0", "y", "0", "0", "0"],
        &["z", "0", "x*y", "0", "0"],
        &["p", "q", "0", "x^2*y", "0"],
        &["r", "h", "-y*p", "0", "y^2*x^2"],
    ],
    det: "x^6*y^5",
    generic: &[((1, 4), "a1"), ((2, 3), "a2"), ((1, 5), "a3"), ((3, 4), "a3")],
    targets: &[
        t("a1*", &[(1, 1, 4)], "x^2*y*(a1*x + a3*z)"),
        t("a2*", &[(1, 2, 3)], "x*y*(a2*y - a3*q)"),
        t("a3*", &[(1, 1, 5)], "a3*x^3*y^2"),
        t("a3* at (3,4)", &[(1, 3, 4)], "a3*x^3*y^2"),
    ],
};

pub(super) static ENTRIES: &[Entry] = &[
    // dimension 3
    entry(
        "T3_01",
        "𝕋³₀₁",
        3,
        "e1e2=e3",
        Expected {
            h2tm: None,
            h2t: None,
            ..lie_low(0, 0, 1)
        },
    ),
    entry("g1", "𝔤₁", 3, "e2e3=e1", TORTKARA_ONLY),
    entry("g2", "𝔤₂", 3, "e1e3=e1; e2e3=e2", TORTKARA_ONLY),
    Entry {
        params: &["alpha"],
        ..entry("g3", "𝔤₃^α", 3, "e1e3=e1+e2; e2e3=alpha*e2", TORTKARA_ONLY)
    },
    entry("A2", "𝒜₂", 3, "e1e2=e1; e2e3=e2", TORTKARA_ONLY),
    Entry {
        params: &["alpha"],
        identity_params: &[("alpha", "0")],
        note: Some(
            "printed with a free parameter alpha under a superscript-0 name; \
             the Tortkara identity holds exactly at alpha = 0",
        ),
        ..entry("A1_0", "𝒜₁⁰", 3, "e1e2=e3; e1e3=e1+e3; e2e3=alpha*e2", TORTKARA_ONLY)
    },
    // dimension 4
    Entry {
        note: Some("the split algebra T3_01 + N1"),
        ..entry(
            "T4_01",
            "𝕋⁴₀₁",
            4,
            "e1e2=e3",
            with_gens(lie_low(5, 5, 2), &["D13", "D14", "D23", "D24", "D34"], NONE),
        )
    },
    Entry {
        family: Some(T4_02_FAMILY),
        ..entry(
            "T4_02",
            "𝕋⁴₀₂",
            4,
            "e1e2=e3; e1e3=e4",
            with_gens(lie_low(2, 3, 1), &["D14", "D23"], &["D24"]),
        )
    },
    // dimension 5
    entry(
        "T5_01",
        "𝕋⁵₀₁",
        5,
        "e1e2=e3",
        with_gens(
            lie_low(9, 9, 3),
            &["D13", "D14", "D15", "D23", "D24", "D25", "D34", "D35", "D45"],
            NONE,
        ),
    ),
    Entry {
        family: Some(T5_02_FAMILY),
        ..entry(
            "T5_02",
            "𝕋⁵₀₂",
            5,
            "e1e2=e3; e1e3=e4",
            with_gens(lie_low(5, 7, 2), &["D14", "D15", "D23", "D25", "D35"], &["D24", "D45"]),
        )
    },
    entry(
        "T5_03",
        "𝕋⁵₀₃",
        5,
        "e1e2=e4; e1e3=e5",
        with_gens(
            lie_low(7, 7, 2),
            &["D14", "D15", "D23", "D24", "D25", "D34", "D35"],
            NONE,
        ),
    ),
    Entry {
        family: Some(T5_04_FAMILY),
        ..entry(
            "T5_04",
            "𝕋⁵₀₄",
            5,
            "e1e2=e3; e1e3=e4; e2e3=e5",
            with_gens(lie_low(3, 4, 2), &["D14", "D15 + D24", "D25"], &["D15"]),
        )
    },
    entry(
        "T5_05",
        "𝕋⁵₀₅",
        5,
        "e1e2=e5; e3e4=e5",
        with_gens(
            lie_low(9, 9, 1),
            &["D12", "D13", "D14", "D15", "D23", "D24", "D25", "D35", "D45"],
            NONE,
        ),
    ),
    Entry {
        family: Some(T5_06_FAMILY),
        ..entry(
            "T5_06",
            "𝕋⁵₀₆",
            5,
            "e1e2=e3; e1e4=e5; e2e3=e5",
            with_gens(lie_low(5, 7, 1), &["D13", "D14", "D24", "D25", "D34"], &["D15", "D45"]),
        )
    },
    entry(
        "T5_07",
        "𝕋⁵₀₇",
        5,
        "e1e2=e3; e3e4=e5",
        with_gens(lie_low(4, 4, 1), &["D13", "D14", "D23", "D24"], NONE),
    ),
    Entry {
        family: Some(T5_08_FAMILY),
        ..entry(
            "T5_08",
            "𝕋⁵₀₈",
            5,
            "e1e2=e3; e1e3=e4; e1e4=e5",
            with_gens(lie_low(2, 4, 1), &["D15", "D23"], &["D24", "D25"]),
        )
    },
    Entry {
        family: Some(T5_09_FAMILY),
        ..entry(
            "T5_09",
            "𝕋⁵₀₉",
            5,
            "e1e2=e3; e1e3=e4; e1e4=e5; e2e3=e5",
            with_gens(lie_low(2, 4, 1), &["D14", "D15 + D24"], &["D15", "D25"]),
        )
    },
    Entry {
        family: Some(T5_10_FAMILY),
        extension: ext("T4_02", &["D24"]),
        ..entry(
            "T5_10",
            "𝕋⁵₁₀",
            5,
            "e1e2=e3; e1e3=e4; e2e4=e5",
            Expected {
                h2tm: Some(H2tm::Undefined),
                h2t: Some(3),
                h2tm_gens: NONE,
                h2t_extra: &["D14", "D23", "D34 + D15"],
                tortkara: true,
                malcev: Some(false),
                metabelian: Some(true),
                nilpotent: Some(true),
                ann_dim: Some(1),
            },
        )
    },
    // dimension 6
    Entry {
        note: Some("T5_10 + N1: the product avoids e6, so e6 spans an annihilator component"),
        ..entry("T6_00", "𝕋⁶₀₀", 6, "e1e2=e3; e1e3=e4; e2e4=e5", six(true, 2))
    },
    Entry {
        extension: ext("T4_02", &["D14 + D23", "D24"]),
        ..entry("T6_01", "𝕋⁶₀₁", 6, "e1e2=e3; e1e3=e4; e1e4=e5; e2e3=e5; e2e4=e6", six(true, 2))
    },
    Entry {
        extension: ext("T4_02", &["D23", "D24"]),
        ..entry("T6_02", "𝕋⁶₀₂", 6, "e1e2=e3; e1e3=e4; e2e3=e5; e2e4=e6", six(true, 2))
    },
    Entry {
        extension: ext("T4_02", &["D14", "D24"]),
        ..entry("T6_03", "𝕋⁶₀₃", 6, "e1e2=e3; e1e3=e4; e1e4=e5; e2e4=e6", six(true, 2))
    },
    Entry {
        extension: ext("T5_02", &["D15 + D24"]),
        ..entry("T6_04", "𝕋⁶₀₄", 6, "e1e2=e3; e1e3=e4; e1e5=e6; e2e4=e6", six(true, 1))
    },
    Entry {
        extension: ext("T5_02", &["D23 + D45"]),
        ..entry("T6_05", "𝕋⁶₀₅", 6, "e1e2=e3; e1e3=e4; e2e3=e6; e4e5=e6", six(true, 1))
    },
    Entry {
        extension: ext("T5_02", &["D35 + D24"]),
        ..entry("T6_06", "𝕋⁶₀₆", 6, "e1e2=e3; e1e3=e4; e2e4=e6; e3e5=e6", six(true, 1))
    },
    Entry {
        extension: ext("T5_02", &["D45"]),
        ..entry("T6_07", "𝕋⁶₀₇", 6, "e1e2=e3; e1e3=e4; e4e5=e6", six(true, 1))
    },
    Entry {
        extension: ext("T5_04", &["D14 - D15 + D24"]),
        ..entry(
            "T6_08",
            "𝕋⁶₀₈",
            6,
            "e1e2=e3; e1e3=e4; e1e4=e6; e1e5=-e6; e2e3=e5; e2e4=e6",
            six(true, 1),
        )
    },
    Entry {
        params: &["alpha"],
        extension: ext("T5_04", &["(alpha + 1)*D15 + alpha*D24"]),
        ..entry(
            "T6_09",
            "𝕋⁶₀₉",
            6,
            "e1e2=e3; e1e3=e4; e1e5=(alpha+1)*e6; e2e3=e5; e2e4=alpha*e6",
            PARAMETRIC_SIX,
        )
    },
    Entry {
        extension: ext("T5_06", &["D13 + D45"]),
        ..entry("T6_10", "𝕋⁶₁₀", 6, "e1e2=e3; e1e3=e6; e1e4=e5; e2e3=e5; e4e5=e6", six(true, 1))
    },
    Entry {
        extension: ext("T5_06", &["D15"]),
        ..entry("T6_11", "𝕋⁶₁₁", 6, "e1e2=e3; e1e4=e5; e1e5=e6; e2e3=e5", six(true, 1))
    },
    Entry {
        extension: ext("T5_06", &["D24 + D15"]),
        ..entry("T6_12", "𝕋⁶₁₂", 6, "e1e2=e3; e1e4=e5; e1e5=e6; e2e3=e5; e2e4=e6", six(true, 1))
    },
    Entry {
        extension: ext("T5_06", &["D34 + D15"]),
        ..entry("T6_13", "𝕋⁶₁₃", 6, "e1e2=e3; e1e4=e5; e1e5=e6; e2e3=e5; e3e4=e6", six(true, 1))
    },
    Entry {
        extension: ext("T5_06", &["D45"]),
        ..entry("T6_14", "𝕋⁶₁₄", 6, "e1e2=e3; e1e4=e5; e2e3=e5; e4e5=e6", six(true, 1))
    },
    Entry {
        extension: ext("T5_08", &["D15 + D24"]),
        ..entry("T6_15", "𝕋⁶₁₅", 6, "e1e2=e3; e1e3=e4; e1e4=e5; e1e5=e6; e2e4=e6", six(true, 1))
    },
    Entry {
        extension: ext("T5_08", &["D25"]),
        ..entry("T6_16", "𝕋⁶₁₆", 6, "e1e2=e3; e1e3=e4; e1e4=e5; e2e5=e6", six(true, 1))
    },
    Entry {
        extension: ext("T5_09", &["D25"]),
        ..entry("T6_17", "𝕋⁶₁₇", 6, "e1e2=e3; e1e3=e4; e1e4=e5; e2e3=e5; e2e5=e6", six(true, 1))
    },
    Entry {
        params: &["alpha"],
        extension: ext("T5_09", &["alpha*D24 + (alpha + 1)*D15"]),
        ..entry(
            "T6_18",
            "𝕋⁶₁₈",
            6,
            "e1e2=e3; e1e3=e4; e1e4=e5; e1e5=(alpha+1)*e6; e2e3=e5; e2e4=alpha*e6",
            PARAMETRIC_SIX,
        )
    },
    Entry {
        extension: ext("T5_10", &["D15 + D34"]),
        ..entry("T6_19", "𝕋⁶₁₉", 6, "e1e2=e3; e1e3=e4; e1e5=e6; e2e4=e5; e3e4=e6", six(false, 1))
    },
];
