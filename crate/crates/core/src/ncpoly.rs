//! Noncommutative polynomials over [`Scalar`] and rewriting to normal form.
//!
//! Rules have length-2 left sides. Every right-hand word must be smaller
//! than its left side in degree-lexicographic order, which makes reduction
//! terminate; uniqueness of normal forms is then a matter of resolving the
//! length-3 overlaps, see [`Presentation::confluence`].

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{GaussRat, Scalar};

pub type Word = Vec<u8>;

/// Degree first, then lexicographic by generator index.
pub fn deglex(a: &[u8], b: &[u8]) -> std::cmp::Ordering {
    (a.len(), a).cmp(&(b.len(), b))
}

#[derive(Clone, PartialEq, Eq, Debug, Default, Hash)]
pub struct NCPoly {
    terms: BTreeMap<Word, Scalar>,
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly::default()
    }

    pub fn one() -> Self {
        NCPoly::scalar(Scalar::one())
    }

    pub fn scalar(s: Scalar) -> Self {
        NCPoly::term(Vec::new(), s)
    }

    pub fn word(w: Word) -> Self {
        NCPoly::term(w, Scalar::one())
    }

    pub fn gen(g: u8) -> Self {
        NCPoly::word(vec![g])
    }

    pub fn term(w: Word, s: Scalar) -> Self {
        let mut p = NCPoly::zero();
        p.add_term(w, s);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, w: &[u8]) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, w: Word, s: Scalar) {
        if s.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(s);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += s;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, o: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        out.add_assign(o);
        out
    }

    pub fn add_assign(&mut self, o: &NCPoly) {
        for (w, s) in &o.terms {
            self.add_term(w.clone(), s.clone());
        }
    }

    pub fn sub(&self, o: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (w, s) in &o.terms {
            out.add_term(w.clone(), -s);
        }
        out
    }

    pub fn neg(&self) -> NCPoly {
        self.scale(&Scalar::int(-1))
    }

    pub fn scale(&self, s: &Scalar) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c * s);
        }
        out
    }

    /// Free (unreduced) concatenation product.
    pub fn mul(&self, o: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_term(w, c1 * c2);
            }
        }
        out
    }

    pub fn commutator(&self, o: &NCPoly) -> NCPoly {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Result<Scalar>) -> Result<NCPoly> {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c)?);
        }
        Ok(out)
    }

    pub fn specialize(&self, point: &HashMap<String, GaussRat>) -> Result<NCPoly> {
        self.map_coeffs(|c| c.specialize(point))
    }

    /// Substitutes each generator by a polynomial (free product, unreduced).
    pub fn substitute(&self, images: &[NCPoly]) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            let mut t = NCPoly::scalar(c.clone());
            for &g in w {
                t = t.mul(&images[g as usize]);
            }
            out.add_assign(&t);
        }
        out
    }

    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    /// Renders with generator names; coefficients with several terms are
    /// parenthesized, as in `ad + (q^-1 - p)·bc`.
    pub fn display(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut words: Vec<(&Word, &Scalar)> = self.terms.iter().collect();
        words.sort_by(|a, b| deglex(a.0, b.0));
        let mut out = String::new();
        for (k, (w, c)) in words.into_iter().enumerate() {
            let wname: String = w.iter().map(|&g| names[g as usize].as_str()).collect();
            let cs = c.to_string();
            let (neg, body) = if c.num_terms() == 1 {
                match cs.strip_prefix('-') {
                    Some(rest) => (true, rest.to_string()),
                    None => (false, cs.clone()),
                }
            } else {
                (false, format!("({cs})"))
            };
            let piece = if w.is_empty() {
                body
            } else if body == "1" {
                wname
            } else {
                format!("{body}·{wname}")
            };
            match (k == 0, neg) {
                (true, false) => out.push_str(&piece),
                (true, true) => out.push_str(&format!("-{piece}")),
                (false, false) => out.push_str(&format!(" + {piece}")),
                (false, true) => out.push_str(&format!(" - {piece}")),
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Rule {
    pub lhs: [u8; 2],
    pub rhs: NCPoly,
}

/// Generators plus length-2 rewrite rules.
#[derive(Clone, Debug)]
pub struct Presentation {
    name: String,
    generators: Vec<String>,
    rules: Arc<HashMap<[u8; 2], NCPoly>>,
    order: Vec<[u8; 2]>,
}

/// JSON form of a presentation.
#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct PresentationConfig {
    #[serde(default)]
    pub name: Option<String>,
    pub generators: Vec<String>,
    pub rules: Vec<RuleConfig>,
}

#[derive(Serialize, Deserialize, Debug, Clone)]
pub struct RuleConfig {
    pub lhs: String,
    /// `[coefficient, word]` pairs; the empty word is the unit.
    pub rhs: Vec<(String, String)>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConfluenceFailure {
    pub overlap: String,
    pub left: String,
    pub right: String,
}

impl Presentation {
    pub fn new(name: &str, generators: &[&str], rules: Vec<Rule>) -> Result<Self> {
        if generators.len() > u8::MAX as usize {
            return Err(Error::Config("too many generators".into()));
        }
        let generators: Vec<String> = generators.iter().map(|s| s.to_string()).collect();
        let mut map = HashMap::new();
        let mut order = Vec::new();
        for r in rules {
            let show = |w: &[u8]| w.iter().map(|&g| generators[g as usize].as_str()).collect::<String>();
            for (w, _) in r.rhs.terms() {
                if deglex(w, &r.lhs) != std::cmp::Ordering::Less {
                    return Err(Error::NonTerminating(format!("{} → {}", show(&r.lhs), r.rhs.display(&generators))));
                }
            }
            if map.insert(r.lhs, r.rhs).is_some() {
                return Err(Error::Config(format!("duplicate rule for {}", show(&r.lhs))));
            }
            order.push(r.lhs);
        }
        Ok(Presentation {
            name: name.to_string(),
            generators,
            rules: Arc::new(map),
            order,
        })
    }

    /// Rules written with generator names, e.g. `("da", [(1, "ad"), (c, "bc")])`.
    pub fn from_rules(name: &str, generators: &[&str], rules: &[(&str, Vec<(Scalar, &str)>)]) -> Result<Self> {
        let tmp = Presentation::new(name, generators, vec![])?;
        let mut out = Vec::new();
        for (lhs, rhs) in rules {
            let l = tmp.parse_word(lhs)?;
            if l.len() != 2 {
                return Err(Error::Config(format!("rule lhs `{lhs}` must have length 2")));
            }
            let mut r = NCPoly::zero();
            for (c, w) in rhs {
                r.add_term(tmp.parse_word(w)?, c.clone());
            }
            out.push(Rule { lhs: [l[0], l[1]], rhs: r });
        }
        Presentation::new(name, generators, out)
    }

    /// Parses `word` into a monomial polynomial.
    pub fn w(&self, word: &str) -> NCPoly {
        NCPoly::word(self.parse_word(word).expect("known generators"))
    }

    pub fn from_config(cfg: &PresentationConfig) -> Result<Self> {
        let gens: Vec<&str> = cfg.generators.iter().map(String::as_str).collect();
        let tmp = Presentation::new("tmp", &gens, vec![])?;
        let mut rules = Vec::new();
        for r in &cfg.rules {
            let lhs = tmp.parse_word(&r.lhs)?;
            if lhs.len() != 2 {
                return Err(Error::Config(format!("rule lhs `{}` must have length 2", r.lhs)));
            }
            let mut rhs = NCPoly::zero();
            for (c, w) in &r.rhs {
                rhs.add_term(tmp.parse_word(w)?, Scalar::parse(c)?);
            }
            rules.push(Rule { lhs: [lhs[0], lhs[1]], rhs });
        }
        Presentation::new(cfg.name.as_deref().unwrap_or("custom"), &gens, rules)
    }

    pub fn to_config(&self) -> PresentationConfig {
        PresentationConfig {
            name: Some(self.name.clone()),
            generators: self.generators.clone(),
            rules: self
                .order
                .iter()
                .map(|lhs| RuleConfig {
                    lhs: self.word_name(lhs),
                    rhs: self.rules[lhs]
                        .terms()
                        .map(|(w, c)| (c.to_string(), self.word_name(w)))
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn rules(&self) -> impl Iterator<Item = ([u8; 2], &NCPoly)> {
        self.order.iter().map(|l| (*l, &self.rules[l]))
    }

    pub fn rule(&self, lhs: [u8; 2]) -> Option<&NCPoly> {
        self.rules.get(&lhs)
    }

    pub fn gen(&self, name: &str) -> Result<u8> {
        self.generators
            .iter()
            .position(|g| g == name)
            .map(|k| k as u8)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn g(&self, name: &str) -> NCPoly {
        NCPoly::gen(self.gen(name).expect("known generator"))
    }

    pub fn word_name(&self, w: &[u8]) -> String {
        w.iter().map(|&g| self.generators[g as usize].as_str()).collect()
    }

    /// Greedy longest-match split of a word into generator names; spaces
    /// and `*` between generators are ignored.
    pub fn parse_word(&self, s: &str) -> Result<Word> {
        let s: String = s.chars().filter(|c| !c.is_whitespace() && *c != '*' && *c != '·').collect();
        let mut out = Vec::new();
        let mut rest = s.as_str();
        while !rest.is_empty() {
            let best = self
                .generators
                .iter()
                .enumerate()
                .filter(|(_, g)| rest.starts_with(g.as_str()))
                .max_by_key(|(_, g)| g.len());
            match best {
                Some((k, g)) => {
                    out.push(k as u8);
                    rest = &rest[g.len()..];
                }
                None => {
                    let c: String = rest.chars().take(1).collect();
                    return Err(Error::UnknownGenerator(c));
                }
            }
        }
        Ok(out)
    }

    pub fn display(&self, p: &NCPoly) -> String {
        p.display(&self.generators)
    }

    pub fn reducer(&self) -> Reducer<'_> {
        Reducer {
            pres: self,
            cache: HashMap::new(),
        }
    }

    pub fn normal_order(&self, p: &NCPoly) -> NCPoly {
        self.reducer().reduce(p)
    }

    pub fn is_normal(&self, w: &[u8]) -> bool {
        w.windows(2).all(|p| !self.rules.contains_key(&[p[0], p[1]]))
    }

    /// Resolves every overlap `xyz` with `xy` and `yz` both rule heads.
    pub fn confluence(&self) -> Vec<ConfluenceFailure> {
        let mut red = self.reducer();
        let mut fails = Vec::new();
        for l1 in &self.order {
            for l2 in &self.order {
                if l1[1] != l2[0] {
                    continue;
                }
                let x = NCPoly::gen(l1[0]);
                let z = NCPoly::gen(l2[1]);
                let left = red.reduce(&self.rules[l1].mul(&z));
                let right = red.reduce(&x.mul(&self.rules[l2]));
                if left != right {
                    fails.push(ConfluenceFailure {
                        overlap: self.word_name(&[l1[0], l1[1], l2[1]]),
                        left: self.display(&left),
                        right: self.display(&right),
                    });
                }
            }
        }
        fails
    }

    /// Same generators, rules with coefficients specialized.
    pub fn specialize(&self, point: &HashMap<String, GaussRat>) -> Result<Presentation> {
        let gens: Vec<&str> = self.generators.iter().map(String::as_str).collect();
        let mut rules = Vec::new();
        for lhs in &self.order {
            rules.push(Rule {
                lhs: *lhs,
                rhs: self.rules[lhs].specialize(point)?,
            });
        }
        Presentation::new(&self.name, &gens, rules)
    }

    /// Replaces or adds one rule (used to build deliberately broken systems).
    pub fn with_rule(&self, rule: Rule) -> Result<Presentation> {
        let gens: Vec<&str> = self.generators.iter().map(String::as_str).collect();
        let mut rules: Vec<Rule> = self
            .order
            .iter()
            .filter(|l| **l != rule.lhs)
            .map(|l| Rule {
                lhs: *l,
                rhs: self.rules[l].clone(),
            })
            .collect();
        rules.push(rule);
        Presentation::new(&self.name, &gens, rules)
    }
}

/// Normal-form computation with a per-instance memo of reduced words.
pub struct Reducer<'a> {
    pres: &'a Presentation,
    cache: HashMap<Word, NCPoly>,
}

impl Reducer<'_> {
    pub fn reduce(&mut self, p: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in p.terms() {
            let nf = self.reduce_word(w);
            out.add_assign(&nf.scale(c));
        }
        out
    }

    pub fn reduce_word(&mut self, w: &[u8]) -> NCPoly {
        if let Some(hit) = self.cache.get(w) {
            return hit.clone();
        }
        let pos = w
            .windows(2)
            .position(|p| self.pres.rules.contains_key(&[p[0], p[1]]));
        let nf = match pos {
            None => NCPoly::word(w.to_vec()),
            Some(i) => {
                let rules = Arc::clone(&self.pres.rules);
                let rhs = &rules[&[w[i], w[i + 1]]];
                let mut acc = NCPoly::zero();
                for (mid, c) in rhs.terms() {
                    let mut nw = w[..i].to_vec();
                    nw.extend_from_slice(mid);
                    nw.extend_from_slice(&w[i + 2..]);
                    let r = self.reduce_word(&nw);
                    acc.add_assign(&r.scale(c));
                }
                acc
            }
        };
        self.cache.insert(w.to_vec(), nf.clone());
        nf
    }

    /// Normal form of the product `a·b`.
    pub fn mul(&mut self, a: &NCPoly, b: &NCPoly) -> NCPoly {
        self.reduce(&a.mul(b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn manin() -> Presentation {
        let rhs = NCPoly::term(vec![0, 1], Scalar::param_pow("q", -1));
        Presentation::new("manin", &["x", "y"], vec![Rule { lhs: [1, 0], rhs }]).unwrap()
    }

    #[test]
    fn rewrite_and_display() {
        let p = manin();
        let nf = p.normal_order(&NCPoly::word(p.parse_word("yx").unwrap()));
        assert_eq!(p.display(&nf), "q^-1·xy");
        let nf2 = p.normal_order(&NCPoly::word(p.parse_word("yyx").unwrap()));
        assert_eq!(p.display(&nf2), "q^-2·xyy");
        assert_eq!(p.normal_order(&nf2), nf2);
        assert!(p.confluence().is_empty());
    }

    #[test]
    fn rejects_increasing_rule() {
        let r = Presentation::new("bad", &["x", "y"], vec![Rule { lhs: [0, 1], rhs: NCPoly::word(vec![1, 0]) }]);
        assert!(matches!(r, Err(Error::NonTerminating(_))));
    }

    #[test]
    fn unknown_generator() {
        assert_eq!(manin().parse_word("xz"), Err(Error::UnknownGenerator("z".into())));
    }

    #[test]
    fn config_roundtrip() {
        let p = manin();
        let cfg = p.to_config();
        let json = serde_json::to_string(&cfg).unwrap();
        let back = Presentation::from_config(&serde_json::from_str(&json).unwrap()).unwrap();
        assert_eq!(back.rule([1, 0]), p.rule([1, 0]));
    }
}
