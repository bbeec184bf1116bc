//! Braid groups `Bₙ` as reduced words in the Artin generators, an equality
//! test through the (faithful) Artin action on the free group, the map to
//! `Sₙ`, operad substitution by cabling, and the subgroup `B¹ₙ` generated by
//! `σ₂, …, σₙ₋₁`.
//!
//! Permutations act on positions so that `|uv| = |u| ∘ |v|`: reading a word
//! left to right, `|u|(i)` is the starting position of the strand that ends
//! in position `i`.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// A generator `σᵢ^{±1}`, `i` 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub index: usize,
    pub positive: bool,
}

impl Letter {
    fn inverse(self) -> Letter {
        Letter {
            index: self.index,
            positive: !self.positive,
        }
    }

    fn signed(self) -> i64 {
        if self.positive {
            self.index as i64
        } else {
            -(self.index as i64)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
    b1: bool,
}

fn reduce(letters: impl IntoIterator<Item = Letter>) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::new();
    for l in letters {
        if out.last() == Some(&l.inverse()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

impl BraidWord {
    /// Letters as signed generator indices (`-2` is `σ₂⁻¹`), freely reduced.
    pub fn new(strands: usize, signed: &[i64]) -> Result<Self, Error> {
        let mut letters = Vec::with_capacity(signed.len());
        for &s in signed {
            let i = s.unsigned_abs() as usize;
            if s == 0 || i >= strands {
                return Err(Error::InvalidBraidWord(format!("σ{s} in B{strands}")));
            }
            letters.push(Letter {
                index: i,
                positive: s > 0,
            });
        }
        Ok(BraidWord {
            strands,
            letters: reduce(letters),
            b1: false,
        })
    }

    fn from_letters(strands: usize, letters: impl IntoIterator<Item = Letter>) -> Self {
        BraidWord {
            strands,
            letters: reduce(letters),
            b1: false,
        }
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord {
            strands,
            letters: Vec::new(),
            b1: strands > 0,
        }
    }

    /// `σᵢ` (or `σᵢ⁻¹`) in `Bₙ`.
    pub fn generator(strands: usize, index: usize, positive: bool) -> Result<Self, Error> {
        let s = if positive { index as i64 } else { -(index as i64) };
        BraidWord::new(strands, &[s])
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn signed_letters(&self) -> Vec<i64> {
        self.letters.iter().map(|l| l.signed()).collect()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Whether this word was built as an element of `B¹ₙ`.
    pub fn is_b1(&self) -> bool {
        self.b1
    }

    pub fn uses_sigma_one(&self) -> bool {
        self.letters.iter().any(|l| l.index == 1)
    }

    /// `self` followed by `other`.
    pub fn mul(&self, other: &BraidWord) -> Result<BraidWord, Error> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let mut w = BraidWord::from_letters(self.strands, self.letters.iter().chain(&other.letters).copied());
        w.b1 = self.b1 && other.b1;
        Ok(w)
    }

    pub fn inverse(&self) -> BraidWord {
        let mut w = BraidWord::from_letters(self.strands, self.letters.iter().rev().map(|l| l.inverse()));
        w.b1 = self.b1;
        w
    }

    /// Side-by-side: `self` on the first strands, `other` shifted past them.
    pub fn tensor(&self, other: &BraidWord) -> BraidWord {
        let shift = self.strands;
        let letters = self.letters.iter().copied().chain(other.letters.iter().map(|l| Letter {
            index: l.index + shift,
            positive: l.positive,
        }));
        let mut w = BraidWord::from_letters(self.strands + other.strands, letters);
        w.b1 = self.b1 && self.strands > 0;
        w
    }

    fn shifted(&self, strands: usize, by: usize) -> Vec<Letter> {
        debug_assert!(by + self.strands <= strands);
        self.letters
            .iter()
            .map(|l| Letter {
                index: l.index + by,
                positive: l.positive,
            })
            .collect()
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.strands)?;
        for l in &self.letters {
            write!(f, " {}", l.signed())?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    /// `"3: 1 2 -1"` is `σ₁σ₂σ₁⁻¹ ∈ B₃`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::InvalidBraidWord(s.to_string());
        let (n, rest) = s.split_once(':').ok_or_else(bad)?;
        let n: usize = n.trim().parse().map_err(|_| bad())?;
        let letters = rest
            .split_whitespace()
            .map(|t| t.parse::<i64>().map_err(|_| bad()))
            .collect::<Result<Vec<_>, _>>()?;
        BraidWord::new(n, &letters)
    }
}

/// A word over `σ₂, …, σₙ₋₁`, tagged as an element of `B¹ₙ`.
pub fn b1_word(strands: usize, signed: &[i64]) -> Result<BraidWord, Error> {
    if signed.iter().any(|s| s.unsigned_abs() == 1) {
        return Err(Error::UsesGeneratorOne);
    }
    let mut w = BraidWord::new(strands, signed)?;
    debug_assert!(braid_to_perm(&w).image(1) == 1);
    w.b1 = true;
    Ok(w)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// From 1-based images; fails unless a bijection.
    pub fn from_images(images: Vec<usize>) -> Result<Self, Error> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i == 0 || i > n || seen[i - 1] {
                return Err(Error::Shape(format!("{images:?} is not a permutation")));
            }
            seen[i - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn transposition(n: usize, i: usize) -> Self {
        let mut p = Permutation::identity(n);
        p.images.swap(i - 1, i);
        p
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// Image of the 1-based point `i`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&i| self.images[i - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (i, &p) in self.images.iter().enumerate() {
            images[p - 1] = i + 1;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| p == i + 1)
    }

    /// Applies the permutation to a list: output `i` is input `self(i)`.
    pub fn permute<T: Clone>(&self, items: &[T]) -> Vec<T> {
        self.images.iter().map(|&i| items[i - 1].clone()).collect()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(usize::to_string).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// `σᵢ ↦ (i, i+1)`.
pub fn braid_to_perm(u: &BraidWord) -> Permutation {
    u.letters.iter().fold(Permutation::identity(u.strands), |p, l| {
        p.compose(&Permutation::transposition(u.strands, l.index))
    })
}

/// Free group words on `x₁, …, xₙ` as signed 1-based indices.
type FreeWord = Vec<i64>;

fn free_reduce(w: impl IntoIterator<Item = i64>) -> FreeWord {
    let mut out: FreeWord = Vec::new();
    for g in w {
        if out.last() == Some(&-g) {
            out.pop();
        } else {
            out.push(g);
        }
    }
    out
}

/// Image of a generator `x_j^{±1}` under the automorphism of one letter.
fn artin_letter(l: Letter, g: i64) -> FreeWord {
    let i = l.index as i64;
    let j = g.abs();
    let img: FreeWord = match (l.positive, j - i) {
        (true, 0) => vec![i, i + 1, -i],
        (true, 1) => vec![i],
        (false, 0) => vec![i + 1],
        (false, 1) => vec![-(i + 1), i, i + 1],
        _ => vec![j],
    };
    if g > 0 {
        img
    } else {
        img.iter().rev().map(|x| -x).collect()
    }
}

/// Images of `x₁, …, xₙ` under the Artin automorphism of `u`.
pub fn artin_images(u: &BraidWord) -> Vec<FreeWord> {
    (1..=u.strands as i64)
        .map(|j| {
            u.letters.iter().rev().fold(vec![j], |w, &l| {
                free_reduce(w.into_iter().flat_map(|g| artin_letter(l, g)))
            })
        })
        .collect()
}

/// Equality in `Bₙ`, decided by comparing Artin actions.
pub fn braid_equal(u: &BraidWord, v: &BraidWord) -> Result<bool, Error> {
    if u.strands != v.strands {
        return Err(Error::StrandMismatch {
            left: u.strands,
            right: v.strands,
        });
    }
    Ok(u.letters == v.letters || artin_images(u) == artin_images(v))
}

/// The crossing of a bundle of `p` strands at offset `o` over the next
/// bundle of `q` strands, each strand of the second bundle moving left in
/// turn.
fn cable_crossing(o: usize, p: usize, q: usize) -> Vec<Letter> {
    let mut out = Vec::new();
    for r in 1..=q {
        for k in (o + r..o + p + r).rev() {
            out.push(Letter {
                index: k,
                positive: true,
            });
        }
    }
    out
}

/// `s` with strand `i` replaced by a bundle of `sizes[i]` parallel strands.
pub fn cable(s: &BraidWord, sizes: &[usize]) -> Result<BraidWord, Error> {
    if sizes.len() != s.strands {
        return Err(Error::ArityMismatch {
            expected: s.strands,
            got: sizes.len(),
        });
    }
    let total: usize = sizes.iter().sum();
    let mut sizes = sizes.to_vec();
    let mut letters = Vec::new();
    for l in &s.letters {
        let i = l.index - 1;
        let o: usize = sizes[..i].iter().sum();
        if l.positive {
            letters.extend(cable_crossing(o, sizes[i], sizes[i + 1]));
        } else {
            let c = cable_crossing(o, sizes[i + 1], sizes[i]);
            letters.extend(c.into_iter().rev().map(Letter::inverse));
        }
        sizes.swap(i, i + 1);
    }
    Ok(BraidWord::from_letters(total, letters))
}

/// `s(t₁, …, tₙ)`: the `tᵢ` side by side on the bundles, then the cable of `s`.
pub fn operad_subst(s: &BraidWord, parts: &[BraidWord]) -> Result<BraidWord, Error> {
    if parts.len() != s.strands {
        return Err(Error::ArityMismatch {
            expected: s.strands,
            got: parts.len(),
        });
    }
    let sizes: Vec<usize> = parts.iter().map(BraidWord::strands).collect();
    let total: usize = sizes.iter().sum();
    let mut letters = Vec::new();
    let mut o = 0;
    for t in parts {
        letters.extend(t.shifted(total, o));
        o += t.strands;
    }
    letters.extend(cable(s, &sizes)?.letters);
    let mut w = BraidWord::from_letters(total, letters);
    w.b1 = s.b1 && parts.first().is_some_and(|t| t.b1) && !w.uses_sigma_one();
    Ok(w)
}

/// `|s|(|t₁|, …, |tₙ|)` computed on permutations: output block `i` is input
/// block `|s|(i)`, internally permuted by that block's `|t|`.
pub fn perm_subst(s: &Permutation, parts: &[Permutation]) -> Permutation {
    let sizes: Vec<usize> = parts.iter().map(Permutation::len).collect();
    let offsets: Vec<usize> = sizes
        .iter()
        .scan(0, |acc, &k| {
            let o = *acc;
            *acc += k;
            Some(o)
        })
        .collect();
    let mut images = Vec::new();
    for i in 1..=s.len() {
        let b = s.image(i) - 1;
        for p in 1..=sizes[b] {
            images.push(offsets[b] + parts[b].image(p));
        }
    }
    Permutation { images }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    #[test]
    fn braid_relation_and_far_commutation() {
        assert!(braid_equal(&w("3: 1 2 1"), &w("3: 2 1 2")).unwrap());
        assert!(braid_equal(&w("3: 1 -1"), &w("3:")).unwrap());
        assert!(braid_equal(&w("4: 1 3"), &w("4: 3 1")).unwrap());
        assert!(!braid_equal(&w("3: 1 2"), &w("3: 2 1")).unwrap());
        // the relation σ₁σ₂σ₂ = σ₁σ₂σ₁ would force σ₂ = σ₁
        assert!(!braid_equal(&w("3: 1 2 2"), &w("3: 1 2 1")).unwrap());
        assert!(matches!(
            braid_equal(&w("3: 1"), &w("4: 1")),
            Err(Error::StrandMismatch { .. })
        ));
    }

    #[test]
    fn relations_hold_in_b5() {
        for i in 1..4i64 {
            let l = BraidWord::new(5, &[i, i + 1, i]).unwrap();
            let r = BraidWord::new(5, &[i + 1, i, i + 1]).unwrap();
            assert!(braid_equal(&l, &r).unwrap());
            for j in 1..5i64 {
                if (i - j).abs() > 1 {
                    let l = BraidWord::new(5, &[i, j]).unwrap();
                    let r = BraidWord::new(5, &[j, i]).unwrap();
                    assert!(braid_equal(&l, &r).unwrap());
                }
            }
        }
        // σ₁² is not trivial
        assert!(!braid_equal(&w("5: 1 1"), &w("5:")).unwrap());
    }

    #[test]
    fn words_reduce_and_round_trip() {
        assert_eq!(w("3: 1 2 -2 -1 2").signed_letters(), vec![2]);
        assert_eq!(w("3: 1 2 -1").to_string(), "3: 1 2 -1");
        assert!("3: 3".parse::<BraidWord>().is_err());
        assert!("3 1".parse::<BraidWord>().is_err());
        assert!(BraidWord::new(2, &[0]).is_err());
    }

    #[test]
    fn permutations() {
        assert_eq!(braid_to_perm(&w("2: 1")).images(), &[2, 1]);
        assert!(braid_to_perm(&w("3:")).is_identity());
        assert!(braid_to_perm(&w("3: 1 2 1 1 2 1")).is_identity());
        let p = braid_to_perm(&w("3: 1 2"));
        assert_eq!(p.compose(&p.inverse()), Permutation::identity(3));
        assert_eq!(p.permute(&["a", "b", "c"]), vec!["b", "c", "a"]);
    }

    #[test]
    fn substitution_examples() {
        let s = w("2: 1");
        let t1 = BraidWord::identity(1);
        assert_eq!(operad_subst(&s, &[t1.clone(), t1.clone()]).unwrap(), s);
        let r = operad_subst(&w("2:"), &[w("2: 1"), t1.clone()]).unwrap();
        assert_eq!(r.signed_letters(), vec![1]);
        assert_eq!(r.strands(), 3);
        let r = operad_subst(&s, &[BraidWord::identity(2), t1.clone()]).unwrap();
        assert!(braid_equal(&r, &w("3: 2 1")).unwrap());
        assert_eq!(braid_to_perm(&r).images(), &[3, 1, 2]);
        assert!(matches!(operad_subst(&s, &[t1]), Err(Error::ArityMismatch { .. })));
    }

    #[test]
    fn b1_words() {
        let u = b1_word(3, &[2]).unwrap();
        assert!(u.is_b1());
        assert_eq!(braid_to_perm(&u).image(1), 1);
        let a = b1_word(4, &[2, 3, 2]).unwrap();
        let b = b1_word(4, &[3, 2, 3]).unwrap();
        assert!(braid_equal(&a, &b).unwrap());
        assert_eq!(b1_word(3, &[1]), Err(Error::UsesGeneratorOne));
        let c = operad_subst(
            &b1_word(3, &[2]).unwrap(),
            &[b1_word(2, &[]).unwrap(), w("2: 1"), w("1:")],
        )
        .unwrap();
        assert!(c.is_b1());
    }

    fn arb_word(n: usize, len: usize) -> impl Strategy<Value = BraidWord> {
        let max = (n as i64 - 1).max(1);
        prop::collection::vec((1..=max, any::<bool>()), 0..=len).prop_map(move |ls| {
            let signed: Vec<i64> = ls.into_iter().map(|(i, p)| if p { i } else { -i }).collect();
            if n < 2 {
                BraidWord::identity(n)
            } else {
                BraidWord::new(n, &signed).unwrap()
            }
        })
    }

    fn arb_parts() -> impl Strategy<Value = Vec<BraidWord>> {
        prop::collection::vec((1usize..=2).prop_flat_map(|k| arb_word(k, 3)), 1..=3)
    }

    proptest! {
        #[test]
        fn perm_is_homomorphism(u in arb_word(4, 8), v in arb_word(4, 8)) {
            let uv = u.mul(&v).unwrap();
            prop_assert_eq!(braid_to_perm(&uv), braid_to_perm(&u).compose(&braid_to_perm(&v)));
        }

        #[test]
        fn inverse_cancels(u in arb_word(4, 8)) {
            prop_assert!(braid_equal(&u.mul(&u.inverse()).unwrap(), &BraidWord::identity(4)).unwrap());
        }

        #[test]
        fn equal_braids_have_equal_perms(u in arb_word(3, 6)) {
            // conjugating by the half twist and back changes the word, not the braid
            let d = w("3: 1 2 1");
            let v = d.mul(&u).unwrap().mul(&d.inverse()).unwrap();
            let back = d.inverse().mul(&v).unwrap().mul(&d).unwrap();
            prop_assert!(braid_equal(&u, &back).unwrap());
            prop_assert_eq!(braid_to_perm(&u), braid_to_perm(&back));
        }

        #[test]
        fn subst_maps_to_perm_subst(parts in arb_parts(), seed in arb_word(3, 4)) {
            let n = parts.len();
            let s = if n == 3 { seed } else if n == 2 { w("2: 1 1 -1") } else { BraidWord::identity(1) };
            let r = operad_subst(&s, &parts).unwrap();
            let perms: Vec<Permutation> = parts.iter().map(braid_to_perm).collect();
            prop_assert_eq!(braid_to_perm(&r), perm_subst(&braid_to_perm(&s), &perms));
        }

        #[test]
        fn subst_is_unital(s in arb_word(3, 6)) {
            let ones = vec![BraidWord::identity(1); 3];
            prop_assert!(braid_equal(&operad_subst(&s, &ones).unwrap(), &s).unwrap());
            let r = operad_subst(&BraidWord::identity(1), &[s.clone()]).unwrap();
            prop_assert!(braid_equal(&r, &s).unwrap());
        }

        #[test]
        fn subst_is_associative(s in arb_word(2, 3), t1 in arb_word(2, 3), t2 in arb_word(1, 0), u in arb_word(2, 2)) {
            // s(t1, t2)(u, 1, 1) = s(t1(u, 1), t2(1))
            let one = BraidWord::identity(1);
            let left = operad_subst(&operad_subst(&s, &[t1.clone(), t2.clone()]).unwrap(), &[u.clone(), one.clone(), one.clone()]).unwrap();
            let right = operad_subst(&s, &[operad_subst(&t1, &[u, one.clone()]).unwrap(), operad_subst(&t2, &[one]).unwrap()]).unwrap();
            prop_assert!(braid_equal(&left, &right).unwrap());
        }
    }
}
