//! The identity registry: ids, parameter schemas and convergence moduli.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Identities known to the crate, in registry order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IdentityId {
    #[serde(rename = "gi_cn_6psi6")]
    GiCn6psi6,
    TeReduction,
    KmtTransform,
    KmsSummation,
    #[serde(rename = "c2_gasper")]
    C2Gasper,
    AkFinite,
    #[serde(rename = "n0_terminating")]
    N0Terminating,
    FlOnevar,
    FlAnForm,
    CmlWatson,
    RgAnReduction,
}

impl IdentityId {
    pub const ALL: [IdentityId; 11] = [
        IdentityId::GiCn6psi6,
        IdentityId::TeReduction,
        IdentityId::KmtTransform,
        IdentityId::KmsSummation,
        IdentityId::C2Gasper,
        IdentityId::AkFinite,
        IdentityId::N0Terminating,
        IdentityId::FlOnevar,
        IdentityId::FlAnForm,
        IdentityId::CmlWatson,
        IdentityId::RgAnReduction,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::GiCn6psi6 => "gi_cn_6psi6",
            IdentityId::TeReduction => "te_reduction",
            IdentityId::KmtTransform => "kmt_transform",
            IdentityId::KmsSummation => "kms_summation",
            IdentityId::C2Gasper => "c2_gasper",
            IdentityId::AkFinite => "ak_finite",
            IdentityId::N0Terminating => "n0_terminating",
            IdentityId::FlOnevar => "fl_onevar",
            IdentityId::FlAnForm => "fl_an_form",
            IdentityId::CmlWatson => "cml_watson",
            IdentityId::RgAnReduction => "rg_an_reduction",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .iter()
            .copied()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown identity id {s:?}")))
    }
}

/// Parameter family of an identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    BilateralCn,
    FiniteCn,
    OneVar,
    AnBilateral,
}

/// Length of a vector field in terms of the dimensions `n` and `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Len {
    N,
    P,
    TwoNPlus2,
    Fixed(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Shape {
    Scalar,
    Vector(Len),
    Ints(Len),
}

impl Shape {
    pub fn describe(self) -> String {
        let len = |l: Len| match l {
            Len::N => "n".to_string(),
            Len::P => "p".to_string(),
            Len::TwoNPlus2 => "2n+2".to_string(),
            Len::Fixed(k) => k.to_string(),
        };
        match self {
            Shape::Scalar => "a scalar".into(),
            Shape::Vector(l) => format!("a vector of length {}", len(l)),
            Shape::Ints(l) => format!("{} nonnegative integers", len(l)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FieldSpec {
    pub name: &'static str,
    pub shape: Shape,
}

const fn field(name: &'static str, shape: Shape) -> FieldSpec {
    FieldSpec { name, shape }
}

/// How the two sides of an identity are evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SideKind {
    /// A multilateral sum; float mode only.
    Bilateral,
    /// Infinite products times a finite sum; float mode only.
    ProductTimesFinite,
    /// Finite sums and finite products; exact in rational mode.
    Finite,
}

/// Registry entry binding an identity to its schema and description.
#[derive(Debug, Clone, Serialize)]
pub struct IdentityDescriptor {
    pub id: IdentityId,
    pub family: Family,
    pub fields: &'static [FieldSpec],
    pub n_range: (usize, usize),
    #[serde(skip)]
    pub p_equals_n: bool,
    #[serde(skip)]
    pub p_zero: bool,
    pub anchor: &'static str,
    /// The quantity whose modulus must stay below the convergence limit.
    pub convergence: Option<&'static str>,
    pub left: SideKind,
    pub right: SideKind,
}

use Len::*;
use Shape::*;

const CN_BASE: &[FieldSpec] = &[
    field("a", Vector(TwoNPlus2)),
    field("z", Vector(N)),
    field("c", Vector(P)),
    field("m", Ints(P)),
];
const GI: &[FieldSpec] = &[field("a", Vector(TwoNPlus2)), field("z", Vector(N))];
const KMT: &[FieldSpec] = &[
    field("a", Vector(TwoNPlus2)),
    field("z", Vector(N)),
    field("c", Vector(P)),
    field("m", Ints(P)),
    field("w", Vector(N)),
];
const KMS: &[FieldSpec] = &[
    field("a", Vector(N)),
    field("b", Scalar),
    field("d", Scalar),
    field("z", Vector(N)),
    field("c", Vector(P)),
    field("m", Ints(P)),
];
const C2: &[FieldSpec] = &[
    field("a", Vector(Fixed(2))),
    field("z", Vector(Fixed(2))),
    field("c", Vector(P)),
    field("m", Ints(P)),
];
const AK: &[FieldSpec] = &[
    field("z", Vector(N)),
    field("c", Vector(P)),
    field("m", Ints(P)),
    field("l", Ints(N)),
    field("b", Scalar),
    field("d", Scalar),
];
const N0: &[FieldSpec] = &[
    field("z", Vector(N)),
    field("m", Ints(P)),
    field("a", Vector(Fixed(1))),
    field("b", Scalar),
];
const CML: &[FieldSpec] = &[
    field("z", Vector(N)),
    field("m", Ints(P)),
    field("b", Scalar),
    field("c", Vector(Fixed(1))),
    field("d", Scalar),
    field("e", Scalar),
];
const FL: &[FieldSpec] = &[
    field("a", Scalar),
    field("b", Scalar),
    field("c", Scalar),
    field("d", Scalar),
    field("e", Scalar),
    field("f", Vector(P)),
    field("m", Ints(P)),
];
const RG: &[FieldSpec] = &[
    field("a", Vector(N)),
    field("b", Vector(N)),
    field("c", Vector(P)),
    field("m", Ints(P)),
    field("z", Vector(N)),
];

const UNBOUNDED: usize = usize::MAX;

/// The registry entry of `id`.
pub fn descriptor(id: IdentityId) -> IdentityDescriptor {
    use IdentityId as I;
    use SideKind::*;
    let base = |family, fields, anchor, convergence, left, right| IdentityDescriptor {
        id,
        family,
        fields,
        n_range: (1, UNBOUNDED),
        p_equals_n: false,
        p_zero: false,
        anchor,
        convergence,
        left,
        right,
    };
    match id {
        I::GiCn6psi6 => IdentityDescriptor {
            p_zero: true,
            ..base(
                Family::BilateralCn,
                GI,
                "C_n very-well-poised 6psi6 summation over Z^n with upper parameters a_1..a_{2n+2}",
                Some("q/A"),
                Bilateral,
                ProductTimesFinite,
            )
        },
        I::TeReduction => base(
            Family::BilateralCn,
            CN_BASE,
            "reduction of a multilateral Karlsson-Minton type C_n series to a finite C_p sum",
            Some("q^(1-|m|)/A"),
            Bilateral,
            ProductTimesFinite,
        ),
        I::KmtTransform => base(
            Family::BilateralCn,
            KMT,
            "transformation of the Karlsson-Minton type C_n series between base points z and w",
            Some("q^(1-|m|)/A"),
            Bilateral,
            Bilateral,
        ),
        I::KmsSummation => base(
            Family::BilateralCn,
            KMS,
            "summation of the Karlsson-Minton type C_n series with paired parameters a_j, 1/a_j",
            Some("q^(1-|m|)/(bd)"),
            Bilateral,
            ProductTimesFinite,
        ),
        I::C2Gasper => IdentityDescriptor {
            n_range: (2, 2),
            ..base(
                Family::BilateralCn,
                C2,
                "C_2 well-poised Karlsson-Minton type summation over y_1, y_2 >= 0",
                Some("q^(1-|m|)/(z_1 z_2)"),
                Bilateral,
                ProductTimesFinite,
            )
        },
        I::AkFinite => base(
            Family::FiniteCn,
            AK,
            "transformation between a terminating C_n sum over 0 <= y <= l and a C_p sum over 0 <= x <= m",
            None,
            Finite,
            Finite,
        ),
        I::N0Terminating => IdentityDescriptor {
            p_equals_n: true,
            ..base(
                Family::FiniteCn,
                N0,
                "C_n analogue of the terminating very-well-poised 6W5 summation",
                None,
                Finite,
                Finite,
            )
        },
        I::FlOnevar => IdentityDescriptor {
            n_range: (1, 1),
            ..base(
                Family::OneVar,
                FL,
                "bilateral well-poised 2p+6 psi 2p+6 series as products times a C_p sum",
                Some("a^2 q^(1-|m|)/(bcde)"),
                Bilateral,
                ProductTimesFinite,
            )
        },
        I::FlAnForm => IdentityDescriptor {
            n_range: (1, 1),
            ..base(
                Family::OneVar,
                FL,
                "the same bilateral well-poised series as products times an A_p sum",
                Some("a^2 q^(1-|m|)/(bcde)"),
                Bilateral,
                ProductTimesFinite,
            )
        },
        I::CmlWatson => IdentityDescriptor {
            p_equals_n: true,
            ..base(
                Family::FiniteCn,
                CML,
                "multivariable Watson transformation from a terminating C_n 8W7 sum to an A_n balanced sum",
                None,
                Finite,
                Finite,
            )
        },
        I::RgAnReduction => base(
            Family::AnBilateral,
            RG,
            "reduction of a Karlsson-Minton type A_n series on y_1 + ... + y_n = 0 to a finite A_p sum",
            Some("q^(1-|m|-n) B/A"),
            Bilateral,
            ProductTimesFinite,
        ),
    }
}

/// All registry entries in stable order.
pub fn list_identities() -> Vec<IdentityDescriptor> {
    IdentityId::ALL.iter().map(|&id| descriptor(id)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_has_eleven_stable_entries() {
        let all = list_identities();
        assert_eq!(all.len(), 11);
        assert_eq!(all[0].id, IdentityId::GiCn6psi6);
        assert_eq!(all[10].id, IdentityId::RgAnReduction);
        assert!(all.iter().all(|d| !d.anchor.is_empty()));
        let te = descriptor(IdentityId::TeReduction);
        assert_eq!(te.family, Family::BilateralCn);
    }

    #[test]
    fn ids_round_trip_through_strings_and_serde() {
        for id in IdentityId::ALL {
            assert_eq!(id.as_str().parse::<IdentityId>().unwrap(), id);
            let s = serde_json::to_string(&id).unwrap();
            assert_eq!(s, format!("\"{}\"", id.as_str()));
            assert_eq!(serde_json::from_str::<IdentityId>(&s).unwrap(), id);
        }
        assert!("nope".parse::<IdentityId>().is_err());
    }
}
