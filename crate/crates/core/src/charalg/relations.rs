//! Relation sets from the nonvanishing proof for m(10_161) and the unit
//! witness for m(10_139).

use crate::freealg::{parse_indexed, parse_poly, LaurentPoly, Names, Z2Poly};

/// Generators of the auxiliary ideal 𝒥 added to the characteristic algebra
/// of m(10_161).
pub const M10_161_IDEAL: [&str; 28] = [
    "x_5",
    "x_6",
    "x_8",
    "x_10",
    "x_15",
    "x_17",
    "x_18",
    "x_19",
    "x_20",
    "x_21",
    "x_22",
    "x_23",
    "x_24",
    "x_26",
    "x_31",
    "x_32",
    "x_35",
    "x_36",
    "x_37",
    "x_38",
    "x_39",
    "x_40",
    "x_30 + 1",
    "x_34 + 1",
    "x_27 x_2 + 1",
    "x_11 x_2",
    "x_28 + x_2",
    "x_11 + x_33",
];

/// The generators forced to vanish by the Z/2 differential of m(10_161).
pub const M10_161_ZEROS: [usize; 8] = [1, 3, 4, 7, 9, 14, 16, 25];

/// The surviving generators of the quotient by 𝒥.
pub const M10_161_SURVIVORS: [usize; 6] = [2, 11, 12, 13, 27, 29];

/// The simplified presentation of the quotient by 𝒥, each relation `= 0`.
pub const M10_161_SIMPLIFIED: [&str; 7] = [
    "x_2 x_13 + x_12 x_11 + 1",
    "x_11 x_12 + x_27 x_12",
    "x_13 x_2 + 1",
    "x_11 (x_29 + 1) + 1",
    "(x_29 + 1) x_11 + x_2 x_27 + 1",
    "x_27 x_12 + 1",
    "x_27 x_2 + 1",
];

/// Names `a..f` for the six-generator form, labels 1..6.
pub fn six_names() -> Names {
    Names::custom(&["a", "b", "c", "d", "e", "f"])
}

/// Names `a..d` for the four-generator form.
pub fn four_names() -> Names {
    Names::custom(&["a", "b", "c", "d"])
}

/// The simplified relations after `x_12 ↦ a, x_13 ↦ b, x_27 ↦ c,
/// x_29 + 1 ↦ d, x_2 ↦ e, x_11 ↦ f`.
pub const SIX_GENERATOR_RELATIONS: [&str; 7] =
    ["eb + af + 1", "fa + ca", "be + 1", "fd + 1", "df + ec + 1", "ca + 1", "ce + 1"];

/// The equivalent relations in which `e` and `f` are linear.
pub const SIX_GENERATOR_LINEAR_FORM: [&str; 7] =
    ["ca + 1", "b + c + f", "ba", "a + d + e", "cd", "bd + 1", "ac + db + 1"];

/// The final four-generator presentation.
pub const FOUR_GENERATOR_RELATIONS: [&str; 5] = ["ac + db + 1", "ba", "bd + 1", "ca + 1", "cd"];

/// An element `w` with `∂w = 1` for the Z[t,t^-1] differential of m(10_139).
pub const M10_139_WITNESS: &str =
    "(x_2 + x_10)(((x_41 x_11 + x_14 x_42) x_15 + x_41 - x_44) x_22 + x_24) + (x_4 + x_16)(x_15 x_22 + x_19) + x_6 + x_43";

fn z2(texts: &[&str], names: &Names) -> Vec<Z2Poly> {
    texts.iter().map(|t| parse_poly(t, names).expect("built-in relation parses").to_z2()).collect()
}

pub fn m10_161_ideal() -> Vec<Z2Poly> {
    z2(&M10_161_IDEAL, &Names::Indexed)
}

pub fn m10_161_simplified() -> Vec<Z2Poly> {
    z2(&M10_161_SIMPLIFIED, &Names::Indexed)
}

pub fn six_generator_relations() -> Vec<Z2Poly> {
    z2(&SIX_GENERATOR_RELATIONS, &six_names())
}

pub fn six_generator_linear_form() -> Vec<Z2Poly> {
    z2(&SIX_GENERATOR_LINEAR_FORM, &six_names())
}

pub fn four_generator_relations() -> Vec<Z2Poly> {
    z2(&FOUR_GENERATOR_RELATIONS, &four_names())
}

/// The six-generator relations with `e = a + d` and `f = b + c`
/// substituted, as elements of the algebra on `a..d`.
pub fn six_generator_relations_eliminated() -> Vec<Z2Poly> {
    let names = four_names();
    let e = parse_poly("a + d", &names).expect("parses").to_z2();
    let f = parse_poly("b + c", &names).expect("parses").to_z2();
    six_generator_relations()
        .iter()
        .map(|p| {
            p.substitute_with(|g| match g.label() {
                1..=4 => Some(Z2Poly::gen(g)),
                5 => Some(e.clone()),
                6 => Some(f.clone()),
                _ => None,
            })
            .expect("relation in a..f")
        })
        .collect()
}

pub fn m10_139_witness() -> LaurentPoly {
    parse_indexed(M10_139_WITNESS).expect("built-in witness parses")
}
