//! The bundled fixture gallery.

use skewverify_core::bialg::{
    bicharacter_cobraiding, s3_group_algebra, sweedler, sweedler_cobraiding, trivial_bialgebra, Bialgebra, Cobraiding,
};
use skewverify_core::exactla::Field;

use crate::spec::{parse_spec_str, BialgebraSpec};
use crate::CliError;

pub struct Fixture {
    pub name: &'static str,
    pub summary: &'static str,
    pub json: &'static str,
    pub expected: &'static str,
}

pub const FIXTURES: [Fixture; 5] = [
    Fixture {
        name: "trivial",
        summary: "K with the trivial cobraiding",
        json: include_str!("../fixtures/trivial.json"),
        expected: include_str!("../fixtures/trivial.expected.json"),
    },
    Fixture {
        name: "z2_sign",
        summary: "Q[Z/2] with r(g^i, g^j) = (-1)^ij",
        json: include_str!("../fixtures/z2_sign.json"),
        expected: include_str!("../fixtures/z2_sign.expected.json"),
    },
    Fixture {
        name: "z4_f5",
        summary: "F5[Z/4] with r(g^i, g^j) = 2^ij, 2 a primitive 4th root of unity",
        json: include_str!("../fixtures/z4_f5.json"),
        expected: include_str!("../fixtures/z4_f5.expected.json"),
    },
    Fixture {
        name: "s3_flip",
        summary: "Q[S3] with r = eps⊗eps; not commutative, so S* fails",
        json: include_str!("../fixtures/s3_flip.json"),
        expected: include_str!("../fixtures/s3_flip.expected.json"),
    },
    Fixture {
        name: "sweedler_lambda1",
        summary: "Sweedler's 4-dimensional Hopf algebra over Q, cobraiding with lambda = 1",
        json: include_str!("../fixtures/sweedler_lambda1.json"),
        expected: include_str!("../fixtures/sweedler_lambda1.expected.json"),
    },
];

pub fn find(name: &str) -> Result<&'static Fixture, CliError> {
    FIXTURES
        .iter()
        .find(|f| f.name == name)
        .ok_or_else(|| CliError::UnknownFixture(name.to_string()))
}

impl Fixture {
    pub fn spec(&self) -> BialgebraSpec {
        parse_spec_str(self.json).expect("bundled fixture parses")
    }
}

/// The fixture built directly from the core constructors.
pub fn construct(name: &str) -> Option<(Bialgebra, Cobraiding)> {
    let q = Field::Rational;
    Some(match name {
        "trivial" => {
            let b = trivial_bialgebra(q);
            let c = b.trivial_cobraiding();
            (b, c)
        }
        "z2_sign" => bicharacter_cobraiding(2, &q.from_i64(-1), q).ok()?,
        "z4_f5" => {
            let f5 = Field::prime(5).ok()?;
            bicharacter_cobraiding(4, &f5.from_i64(2), f5).ok()?
        }
        "s3_flip" => {
            let b = s3_group_algebra(q);
            let c = b.trivial_cobraiding();
            (b, c)
        }
        "sweedler_lambda1" => {
            let b = sweedler(q);
            let c = sweedler_cobraiding(&b, &q.from_i64(1)).ok()?;
            (b, c)
        }
        _ => return None,
    })
}
