//! Finite-dimensional spaces with structural labels.
//!
//! Tensor labels are kept flat with unit factors dropped, so `(X⊗Y)⊗Z`,
//! `X⊗(Y⊗Z)` and `X⊗K⊗Y⊗Z` only differ when one of the factors is itself a
//! hom space. Basis order for a tensor is lexicographic with the leftmost
//! factor most significant; for `hom(A, Y)` the basis element `(y, a)` (the
//! matrix unit sending basis vector `a` to `y`) has index `y * dim A + a`.

use std::fmt;
use std::sync::Arc;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Label {
    Unit,
    Generator(String, Option<Arc<[String]>>),
    Tensor(Vec<Space>),
    Hom(Space, Space),
}

#[derive(Clone, Debug, Eq)]
pub struct Space {
    dim: usize,
    label: Arc<Label>,
}

impl PartialEq for Space {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.label, &other.label) || (self.dim == other.dim && self.label == other.label)
    }
}

impl std::hash::Hash for Space {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.dim.hash(state);
        self.label.hash(state);
    }
}

impl Space {
    /// The ground field viewed as a one-dimensional space.
    pub fn unit() -> Self {
        Space {
            dim: 1,
            label: Arc::new(Label::Unit),
        }
    }

    pub fn generator(name: impl Into<String>, dim: usize) -> Self {
        Space {
            dim,
            label: Arc::new(Label::Generator(name.into(), None)),
        }
    }

    /// A generator whose basis vectors carry display names.
    pub fn with_basis(name: impl Into<String>, basis: Vec<String>) -> Self {
        Space {
            dim: basis.len(),
            label: Arc::new(Label::Generator(name.into(), Some(basis.into()))),
        }
    }

    /// Display name of basis vector `idx`, following the tensor and hom
    /// index schemes.
    pub fn basis_name(&self, idx: usize) -> String {
        match &*self.label {
            Label::Unit => "1".to_string(),
            Label::Generator(_, Some(names)) => names[idx].clone(),
            Label::Generator(n, None) => format!("{n}{idx}"),
            Label::Tensor(fs) => {
                let dims: Vec<usize> = fs.iter().map(Space::dim).collect();
                let ds = super::linmap::digits(idx, &dims);
                fs.iter()
                    .zip(ds)
                    .map(|(f, d)| f.basis_name(d))
                    .collect::<Vec<_>>()
                    .join("⊗")
            }
            Label::Hom(a, y) => {
                let da = a.dim();
                format!("E({}<-{})", y.basis_name(idx / da), a.basis_name(idx % da))
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_unit(&self) -> bool {
        matches!(*self.label, Label::Unit)
    }

    /// Flat list of tensor factors; empty for the unit.
    pub fn factors(&self) -> Vec<Space> {
        match &*self.label {
            Label::Unit => Vec::new(),
            Label::Tensor(fs) => fs.clone(),
            _ => vec![self.clone()],
        }
    }

    pub fn factor_dims(&self) -> Vec<usize> {
        self.factors().iter().map(Space::dim).collect()
    }

    pub fn tensor_all<'a>(spaces: impl IntoIterator<Item = &'a Space>) -> Space {
        let mut fs = Vec::new();
        for s in spaces {
            fs.extend(s.factors());
        }
        match fs.len() {
            0 => Space::unit(),
            1 => fs.pop().unwrap(),
            _ => Space {
                dim: fs.iter().map(Space::dim).product(),
                label: Arc::new(Label::Tensor(fs)),
            },
        }
    }

    pub fn tensor(&self, other: &Space) -> Space {
        Space::tensor_all([self, other])
    }

    /// The space of linear maps `a → y`.
    pub fn hom(a: &Space, y: &Space) -> Space {
        Space {
            dim: a.dim * y.dim,
            label: Arc::new(Label::Hom(a.clone(), y.clone())),
        }
    }

    /// `(source, target)` when this is a hom space.
    pub fn hom_parts(&self) -> Option<(&Space, &Space)> {
        match &*self.label {
            Label::Hom(a, y) => Some((a, y)),
            _ => None,
        }
    }

    /// Splits off the first `k` tensor factors, returning both halves.
    pub fn split_at(&self, k: usize) -> (Space, Space) {
        let fs = self.factors();
        let k = k.min(fs.len());
        (Space::tensor_all(&fs[..k]), Space::tensor_all(&fs[k..]))
    }

    /// True when `self` is `prefix ⊗ rest` for some `rest` at the level of
    /// flat factor lists.
    pub fn strip_prefix(&self, prefix: &Space) -> Option<Space> {
        let fs = self.factors();
        let ps = prefix.factors();
        if ps.len() <= fs.len() && fs[..ps.len()] == ps[..] {
            Some(Space::tensor_all(&fs[ps.len()..]))
        } else {
            None
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.label {
            Label::Unit => write!(f, "K"),
            Label::Generator(n, _) => write!(f, "{n}"),
            Label::Tensor(fs) => {
                for (i, s) in fs.iter().enumerate() {
                    if i > 0 {
                        write!(f, "⊗")?;
                    }
                    write!(f, "{s}")?;
                }
                Ok(())
            }
            Label::Hom(a, y) => write!(f, "[{a},{y}]"),
        }
    }
}
