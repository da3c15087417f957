//! Differential forms with matrix coefficients and central, anticommuting
//! 1-form legs. Both the pure matrix calculus and the hybrid spacetime/matrix
//! calculus are instances: they differ only in how coefficients are
//! differentiated and what `d` does on a single leg.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{GaussRat, Mat, Scalar};

pub type Blade = Vec<usize>;

/// Merges two sorted blades; `None` if they share a leg, else the sign of the
/// shuffle.
pub fn merge_blades(a: &[usize], b: &[usize]) -> Option<(Blade, i32)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut sign = 1;
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i] < b[j]) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j] < a[i] {
            // b[j] jumps over the remaining a-legs
            if (a.len() - i) % 2 == 1 {
                sign = -sign;
            }
            out.push(b[j]);
            j += 1;
        } else {
            return None;
        }
    }
    Some((out, sign))
}

/// A (possibly inhomogeneous) form `Σ A_I θ^I` with `A_I` an n×n matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Form {
    n: usize,
    legs: usize,
    terms: BTreeMap<Blade, Mat>,
}

impl Form {
    pub fn zero(n: usize, legs: usize) -> Self {
        Form {
            n,
            legs,
            terms: BTreeMap::new(),
        }
    }

    pub fn function(legs: usize, a: Mat) -> Self {
        Form::monomial(legs, vec![], a)
    }

    /// `a θ^{blade}`; the blade may be unsorted, the sign is absorbed.
    pub fn monomial(legs: usize, blade: Vec<usize>, a: Mat) -> Self {
        let n = a.rows();
        let mut f = Form::zero(n, legs);
        let mut sorted = Vec::new();
        let mut sign = 1;
        for k in blade {
            assert!(k < legs, "leg {k} out of range");
            match merge_blades(&sorted, &[k]) {
                Some((b, s)) => {
                    sorted = b;
                    sign *= s;
                }
                None => return f,
            }
        }
        let a = if sign < 0 { -&a } else { a };
        f.add_term(sorted, a);
        f
    }

    /// The basis 1-form on leg `k` with unit coefficient.
    pub fn leg(n: usize, legs: usize, k: usize) -> Self {
        Form::monomial(legs, vec![k], Mat::identity(n))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn legs(&self) -> usize {
        self.legs
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &Mat)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, blade: &[usize]) -> Mat {
        self.terms
            .get(blade)
            .cloned()
            .unwrap_or_else(|| Mat::zeros(self.n, self.n))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree if homogeneous (zero counts as every degree, reported as 0).
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(Vec::len);
        let first = it.next().unwrap_or(0);
        it.all(|d| d == first).then_some(first)
    }

    pub fn homogeneous_part(&self, p: usize) -> Form {
        Form {
            n: self.n,
            legs: self.legs,
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| b.len() == p)
                .map(|(b, a)| (b.clone(), a.clone()))
                .collect(),
        }
    }

    /// Restricts to terms whose legs all satisfy `keep`.
    pub fn filter_legs(&self, keep: impl Fn(usize) -> bool) -> Form {
        Form {
            n: self.n,
            legs: self.legs,
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| b.iter().all(|&k| keep(k)))
                .map(|(b, a)| (b.clone(), a.clone()))
                .collect(),
        }
    }

    pub fn add_term(&mut self, blade: Blade, a: Mat) {
        if a.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(blade) {
            Entry::Vacant(e) => {
                e.insert(a);
            }
            Entry::Occupied(mut e) => {
                let s = e.get() + &a;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    fn check_compat(&self, o: &Form) {
        assert_eq!((self.n, self.legs), (o.n, o.legs), "incompatible forms");
    }

    pub fn add(&self, o: &Form) -> Form {
        let mut out = self.clone();
        out.add_assign(o);
        out
    }

    pub fn add_assign(&mut self, o: &Form) {
        self.check_compat(o);
        for (b, a) in &o.terms {
            self.add_term(b.clone(), a.clone());
        }
    }

    pub fn sub_assign(&mut self, o: &Form) {
        self.check_compat(o);
        for (b, a) in &o.terms {
            self.add_term(b.clone(), -a);
        }
    }

    pub fn sub(&self, o: &Form) -> Form {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Form {
        self.map_coeffs(|a| -a)
    }

    pub fn map_coeffs(&self, f: impl Fn(&Mat) -> Mat) -> Form {
        let mut out = Form::zero(self.n, self.legs);
        for (b, a) in &self.terms {
            out.add_term(b.clone(), f(a));
        }
        out
    }

    pub fn try_map_coeffs(&self, f: impl Fn(&Mat) -> Result<Mat>) -> Result<Form> {
        let mut out = Form::zero(self.n, self.legs);
        for (b, a) in &self.terms {
            out.add_term(b.clone(), f(a)?);
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Scalar) -> Form {
        self.map_coeffs(|a| a.scale(s))
    }

    pub fn scale_c(&self, c: &GaussRat) -> Form {
        self.map_coeffs(|a| a.scale_c(c))
    }

    /// Left module action `f·ω`.
    pub fn left_mul(&self, f: &Mat) -> Form {
        self.map_coeffs(|a| f * a)
    }

    /// Right action `ω·f` (legs are central, so it lands on the coefficient).
    pub fn right_mul(&self, f: &Mat) -> Form {
        self.map_coeffs(|a| a * f)
    }

    pub fn wedge(&self, o: &Form) -> Form {
        self.check_compat(o);
        let mut out = Form::zero(self.n, self.legs);
        for (b1, a1) in &self.terms {
            for (b2, a2) in &o.terms {
                if let Some((b, s)) = merge_blades(b1, b2) {
                    let c = a1 * a2;
                    out.add_term(b, if s < 0 { -&c } else { c });
                }
            }
        }
        out
    }

    /// Graded commutator `αβ − (−1)^{|α||β|} βα` for homogeneous inputs.
    pub fn graded_commutator(&self, o: &Form) -> Form {
        let p = self.degree().unwrap_or(0);
        let q = o.degree().unwrap_or(0);
        let ab = self.wedge(o);
        let ba = o.wedge(self);
        if (p * q).is_multiple_of(2) {
            ab.sub(&ba)
        } else {
            ab.add(&ba)
        }
    }

    /// Interior product with `Σ_k X^k ∂_k`, where `∂_k` is dual to leg `k`.
    /// Vector components multiply the coefficient on the right.
    pub fn interior(&self, x: &[Mat]) -> Result<Form> {
        if self.terms.keys().any(Vec::is_empty) {
            return Err(Error::InteriorOfFunction);
        }
        if x.len() != self.legs {
            return Err(Error::Dimension(format!(
                "vector with {} components on {} legs",
                x.len(),
                self.legs
            )));
        }
        let mut out = Form::zero(self.n, self.legs);
        for (b, a) in &self.terms {
            for (pos, &k) in b.iter().enumerate() {
                if x[k].is_zero() {
                    continue;
                }
                let mut rest = b.clone();
                rest.remove(pos);
                let c = a * &x[k];
                out.add_term(rest, if pos % 2 == 1 { -&c } else { c });
            }
        }
        Ok(out)
    }

    pub fn specialize(&self, point: &HashMap<String, GaussRat>) -> Result<Form> {
        self.try_map_coeffs(|a| a.specialize(point))
    }

    /// Exact comparison of two forms after subtracting; returns the difference.
    pub fn residual(&self, o: &Form) -> Form {
        self.sub(o)
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(b, a)| {
                let legs: Vec<String> = b.iter().map(|k| format!("θ{}", k + 1)).collect();
                if legs.is_empty() {
                    a.to_string()
                } else {
                    format!("{a}·{}", legs.join("∧"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// What an exterior differential needs to know about its algebra.
pub trait Calculus {
    fn n(&self) -> usize;
    fn legs(&self) -> usize;
    /// Derivative of a coefficient along the vector dual to leg `k`.
    fn partial(&self, k: usize, a: &Mat) -> Mat;
    /// `d` of the unit 1-form on leg `k` (central coefficients).
    fn d_leg(&self, k: usize) -> Form;

    fn d(&self, w: &Form) -> Result<Form> {
        exterior_d(self, w)
    }
}

pub fn exterior_d<C: Calculus + ?Sized>(c: &C, w: &Form) -> Result<Form> {
    if let Some((b, _)) = w.terms.iter().find(|(b, _)| b.len() >= c.legs()) {
        return Err(Error::TopDegree(b.len(), c.legs()));
    }
    let legs = c.legs();
    let n = c.n();
    let d_legs: Vec<Form> = (0..legs).map(|k| c.d_leg(k)).collect();
    let mut out = Form::zero(n, legs);
    for (b, a) in &w.terms {
        let tail = Form::monomial(legs, b.clone(), Mat::identity(n));
        // dA ∧ θ^I
        for k in 0..legs {
            let pa = c.partial(k, a);
            if pa.is_zero() {
                continue;
            }
            out.add_assign(&Form::monomial(legs, vec![k], pa).wedge(&tail));
        }
        // A dθ^I by the graded Leibniz rule on the legs
        for (pos, &k) in b.iter().enumerate() {
            if d_legs[k].is_zero() {
                continue;
            }
            let before = Form::monomial(legs, b[..pos].to_vec(), a.clone());
            let after = Form::monomial(legs, b[pos + 1..].to_vec(), Mat::identity(n));
            let t = before.wedge(&d_legs[k]).wedge(&after);
            if pos % 2 == 1 {
                out.sub_assign(&t);
            } else {
                out.add_assign(&t);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn merge_signs() {
        assert_eq!(merge_blades(&[0], &[1]), Some((vec![0, 1], 1)));
        assert_eq!(merge_blades(&[1], &[0]), Some((vec![0, 1], -1)));
        assert_eq!(merge_blades(&[0, 2], &[1, 3]), Some((vec![0, 1, 2, 3], -1)));
        assert_eq!(merge_blades(&[0, 1], &[1]), None);
    }

    #[test]
    fn wedge_antisymmetry_and_associativity() {
        let t = |k| Form::leg(2, 4, k);
        assert!(t(0).wedge(&t(0)).is_zero());
        assert_eq!(t(0).wedge(&t(1)), t(1).wedge(&t(0)).neg());
        let a = t(0).add(&t(2));
        let b = t(1).add(&t(3));
        let c = t(2).add(&t(1));
        assert_eq!(a.wedge(&b).wedge(&c), a.wedge(&b.wedge(&c)));
    }

    #[test]
    fn interior_is_nilpotent() {
        let x: Vec<Mat> = (0..3).map(|k| Mat::identity(2).scale(&Scalar::int(k as i64 + 1))).collect();
        let w = Form::monomial(3, vec![0, 1], Mat::identity(2)).add(&Form::monomial(3, vec![1, 2], Mat::identity(2)));
        let ii = w.interior(&x).unwrap().interior(&x).unwrap();
        assert!(ii.is_zero());
        assert_eq!(Form::function(3, Mat::identity(2)).interior(&x), Err(Error::InteriorOfFunction));
    }
}
