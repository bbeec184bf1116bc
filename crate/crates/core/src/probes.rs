//! Probe families: the finite set of test objects and seeded test morphisms
//! every bounded law check ranges over.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactla::{Field, LinMap, Space};

/// Largest accepted probe dimension.
pub const MAX_PROBE_DIM: usize = 3;

/// Seeded morphisms per pair of probe objects in naturality checks.
pub const MORPHISMS_PER_VARIABLE: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Probes {
    spaces: Vec<Space>,
    seed: u64,
}

impl Probes {
    /// One probe object per distinct requested dimension, named `P<dim>` with
    /// basis `x0, x1, ...`.
    pub fn from_dims(dims: &[usize], seed: u64) -> Self {
        let mut seen = Vec::new();
        for &d in dims {
            assert!((1..=MAX_PROBE_DIM).contains(&d), "probe dimension {d} out of range");
            if !seen.contains(&d) {
                seen.push(d);
            }
        }
        assert!(!seen.is_empty(), "empty probe family");
        Probes {
            spaces: seen
                .into_iter()
                .map(|d| Space::with_basis(format!("P{d}"), (0..d).map(|i| format!("x{i}")).collect()))
                .collect(),
            seed,
        }
    }

    pub fn from_spaces(spaces: Vec<Space>, seed: u64) -> Self {
        assert!(!spaces.is_empty(), "empty probe family");
        Probes { spaces, seed }
    }

    pub fn spaces(&self) -> &[Space] {
        &self.spaces
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn names(&self) -> Vec<String> {
        self.spaces.iter().map(Space::to_string).collect()
    }

    /// All `k`-tuples of probe objects, lexicographic in family order.
    pub fn tuples(&self, k: usize) -> Vec<Vec<Space>> {
        let mut out = vec![Vec::new()];
        for _ in 0..k {
            out = out
                .into_iter()
                .flat_map(|t| {
                    self.spaces.iter().map(move |s| {
                        let mut t = t.clone();
                        t.push(s.clone());
                        t
                    })
                })
                .collect();
        }
        out
    }

    /// Seeded random maps `dom → cod` with entries in `-2..=2`; the stream
    /// depends only on the seed, the salt and the two dimensions.
    pub fn morphisms(&self, dom: &Space, cod: &Space, field: Field, salt: u64) -> Vec<LinMap> {
        random_maps(dom, cod, field, self.seed, salt, MORPHISMS_PER_VARIABLE)
    }
}

pub fn random_maps(dom: &Space, cod: &Space, field: Field, seed: u64, salt: u64, count: usize) -> Vec<LinMap> {
    let mix = seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ ((dom.dim() as u64) << 32) ^ (cod.dim() as u64) << 48;
    let mut rng = ChaCha8Rng::seed_from_u64(mix);
    (0..count)
        .map(|_| {
            LinMap::from_fn(dom.clone(), cod.clone(), field, |_| {
                (0..cod.dim())
                    .map(|i| (i, field.from_i64(rng.gen_range(-2..=2))))
                    .collect()
            })
        })
        .collect()
}

pub fn tuple_names(t: &[Space]) -> Vec<String> {
    t.iter().map(Space::to_string).collect()
}
