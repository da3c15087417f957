use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::{LazyLock, RwLock};

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

use super::GaussRat;

static REGISTRY: LazyLock<RwLock<Vec<String>>> = LazyLock::new(|| RwLock::new(Vec::new()));

/// An interned formal parameter (`q`, `p`, `kappa`, `minv`, `x0`, ...).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Param(u16);

impl Param {
    pub fn new(name: &str) -> Param {
        assert!(
            !name.is_empty() && name != "i" && name.chars().all(|c| c.is_alphanumeric() || c == '_'),
            "invalid parameter name `{name}`"
        );
        if let Some(k) = REGISTRY.read().unwrap().iter().position(|s| s == name) {
            return Param(k as u16);
        }
        let mut reg = REGISTRY.write().unwrap();
        if let Some(k) = reg.iter().position(|s| s == name) {
            return Param(k as u16);
        }
        reg.push(name.to_string());
        Param((reg.len() - 1) as u16)
    }

    pub fn name(&self) -> String {
        REGISTRY.read().unwrap()[self.0 as usize].clone()
    }
}

/// Laurent monomial: sorted `(parameter, nonzero exponent)` pairs.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial(Vec<(Param, i32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(p: Param, e: i32) -> Self {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(p, e)])
        }
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, p: Param) -> i32 {
        self.0.iter().find(|(q, _)| *q == p).map_or(0, |(_, e)| *e)
    }

    pub fn factors(&self) -> &[(Param, i32)] {
        &self.0
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|(_, e)| *e as i64).sum()
    }

    /// Exponents add; overflow is an error, never wraparound.
    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + o.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < o.0.len() {
            if j >= o.0.len() || (i < self.0.len() && self.0[i].0 < o.0[j].0) {
                out.push(self.0[i]);
                i += 1;
            } else if i >= self.0.len() || o.0[j].0 < self.0[i].0 {
                out.push(o.0[j]);
                j += 1;
            } else {
                let e = self.0[i]
                    .1
                    .checked_add(o.0[j].1)
                    .unwrap_or_else(|| panic!("{}", Error::ExponentOverflow));
                if e != 0 {
                    out.push((self.0[i].0, e));
                }
                i += 1;
                j += 1;
            }
        }
        Monomial(out)
    }

    pub fn inv(&self) -> Monomial {
        Monomial(
            self.0
                .iter()
                .map(|&(p, e)| (p, e.checked_neg().expect("exponent overflow")))
                .collect(),
        )
    }

    fn named(&self) -> Vec<(String, i32)> {
        let mut v: Vec<_> = self.0.iter().map(|(p, e)| (p.name(), *e)).collect();
        v.sort();
        v
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .named()
            .into_iter()
            .map(|(n, e)| if e == 1 { n } else { format!("{n}^{e}") })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Laurent polynomial in formal parameters with Gaussian-rational coefficients.
///
/// Canonical: zero coefficients are never stored, so structural equality is
/// mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Scalar {
    terms: BTreeMap<Monomial, GaussRat>,
}

/// Degree, named factors and coefficient, in display order.
type SortedTerm<'a> = (i64, Vec<(String, i32)>, &'a GaussRat);

impl Scalar {
    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::constant(GaussRat::one())
    }

    pub fn int(n: i64) -> Self {
        Scalar::constant(GaussRat::int(n))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Scalar::constant(GaussRat::ratio(n, d))
    }

    pub fn i() -> Self {
        Scalar::constant(GaussRat::i())
    }

    pub fn constant(c: GaussRat) -> Self {
        Scalar::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: GaussRat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Scalar { terms }
    }

    pub fn param(name: &str) -> Self {
        Scalar::term(Monomial::var(Param::new(name), 1), GaussRat::one())
    }

    /// `name^e` for any integer `e`.
    pub fn param_pow(name: &str, e: i32) -> Self {
        Scalar::term(Monomial::var(Param::new(name), e), GaussRat::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussRat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn as_constant(&self) -> Option<GaussRat> {
        match self.terms.len() {
            0 => Some(GaussRat::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    /// Single-term scalars are units of the Laurent ring.
    pub fn inv_unit(&self) -> Option<Scalar> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next().unwrap();
        Some(Scalar::term(m.inv(), c.inv().ok()?))
    }

    pub fn scale(&self, c: &GaussRat) -> Scalar {
        if c.is_zero() {
            return Scalar::zero();
        }
        Scalar {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn conj(&self) -> Scalar {
        Scalar {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v.conj())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Scalar {
        let mut acc = Scalar::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn params(&self) -> Vec<Param> {
        let mut v: Vec<Param> = self
            .terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|(p, _)| *p))
            .collect();
        v.sort();
        v.dedup();
        v
    }

    fn add_term(&mut self, m: Monomial, c: GaussRat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Exact substitution of every parameter; fails on a missing parameter or
    /// a negative power of a parameter set to zero.
    pub fn evaluate_at(&self, point: &HashMap<String, GaussRat>) -> Result<GaussRat> {
        let mut acc = GaussRat::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (p, e) in m.factors() {
                let name = p.name();
                let x = point
                    .get(&name)
                    .ok_or_else(|| Error::MissingParameter(name.clone()))?;
                let xp = x
                    .pow(*e)
                    .map_err(|_| Error::DivisionByZero(format!("{name}^{e} at {name}=0")))?;
                v = &v * &xp;
            }
            acc += v;
        }
        Ok(acc)
    }

    /// Substitutes the listed parameters only; others stay symbolic.
    pub fn specialize(&self, point: &HashMap<String, GaussRat>) -> Result<Scalar> {
        let subs: HashMap<String, Scalar> = point
            .iter()
            .map(|(k, v)| (k.clone(), Scalar::constant(v.clone())))
            .collect();
        self.substitute(&subs)
    }

    /// Replaces parameters by scalars. Negative powers need a unit replacement.
    pub fn substitute(&self, subs: &HashMap<String, Scalar>) -> Result<Scalar> {
        let mut out = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = Scalar::constant(c.clone());
            for (p, e) in m.factors() {
                let name = p.name();
                let f = match subs.get(&name) {
                    None => Scalar::term(Monomial::var(*p, *e), GaussRat::one()),
                    Some(s) if *e >= 0 => s.pow(*e as u32),
                    Some(s) => s
                        .inv_unit()
                        .ok_or_else(|| {
                            Error::DivisionByZero(format!("{name}^{e} with non-unit value {s}"))
                        })?
                        .pow(e.unsigned_abs()),
                };
                t = &t * &f;
            }
            out += t;
        }
        Ok(out)
    }

    /// Formal partial derivative.
    pub fn derivative(&self, p: Param) -> Scalar {
        let mut out = Scalar::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(p);
            if e != 0 {
                let dm = m.mul(&Monomial::var(p, -1));
                out.add_term(dm, c * &GaussRat::int(e as i64));
            }
        }
        out
    }

    pub fn to_f64(&self, point: &HashMap<String, GaussRat>) -> Result<f64> {
        let v = self.evaluate_at(point)?;
        Ok(v.to_f64_pair().0)
    }

    /// Parses the text syntax produced by `Display`.
    pub fn parse(s: &str) -> Result<Scalar> {
        super::parse::parse_scalar(s)
    }

    fn sorted_terms(&self) -> Vec<SortedTerm<'_>> {
        let mut v: Vec<_> = self
            .terms
            .iter()
            .map(|(m, c)| (m.degree(), m.named(), c))
            .collect();
        v.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
        v
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (_, named, c) in self.sorted_terms() {
            let mono: Vec<String> = named
                .iter()
                .map(|(n, e)| if *e == 1 { n.clone() } else { format!("{n}^{e}") })
                .collect();
            let mono = mono.join("*");
            // Leading sign is hoisted out of purely real or purely imaginary coefficients.
            let neg = if c.is_real() {
                c.re().is_negative()
            } else {
                c.re().is_zero() && c.im().is_negative()
            };
            let mag = if neg { -c } else { c.clone() };
            let body = if mono.is_empty() {
                mag.to_string()
            } else if mag.is_one() {
                mono
            } else {
                format!("{mag}*{mono}")
            };
            match (first, neg) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl From<GaussRat> for Scalar {
    fn from(c: GaussRat) -> Self {
        Scalar::constant(c)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        let mut out = Scalar::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$m(&o)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                (&self).$m(o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign for Scalar {
    fn add_assign(&mut self, o: Scalar) {
        for (m, c) in o.terms {
            self.add_term(m, c);
        }
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        for (m, c) in &o.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        for (m, c) in &o.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        let mut acc = Scalar::zero();
        for s in iter {
            acc += s;
        }
        acc
    }
}
