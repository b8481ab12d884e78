use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::qscalar::QScalar;

/// A letter of the free algebra: 0 = u, 1 = v, 2 = w.
pub type Letter = u8;
pub type Word = Vec<Letter>;

const LETTERS: [char; 3] = ['u', 'v', 'w'];

pub fn parse_word(s: &str) -> Result<Word> {
    s.chars()
        .filter(|c| !c.is_whitespace() && *c != '*')
        .map(|c| match c {
            'u' => Ok(0),
            'v' => Ok(1),
            'w' => Ok(2),
            other => Err(Error::Parse(format!("unknown generator {other:?}"))),
        })
        .collect()
}

pub fn word_string(w: &[Letter]) -> String {
    w.iter().map(|&l| LETTERS[l as usize]).collect()
}

/// `(a, b, e)` when the word is `u^a v^b w^e`.
pub fn exponents(w: &[Letter]) -> Option<(u32, u32, u32)> {
    if !w.windows(2).all(|p| p[0] <= p[1]) {
        return None;
    }
    let count = |l| w.iter().filter(|&&x| x == l).count() as u32;
    Some((count(0), count(1), count(2)))
}

pub fn sorted_word(a: u32, b: u32, e: u32) -> Word {
    let mut w = vec![0; a as usize];
    w.extend(std::iter::repeat_n(1, b as usize));
    w.extend(std::iter::repeat_n(2, e as usize));
    w
}

/// Compact monomial rendering: `uv`, `u^2w`, `1`.
pub fn monomial_string(w: &[Letter]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    let mut out = String::new();
    let mut i = 0;
    while i < w.len() {
        let mut j = i;
        while j < w.len() && w[j] == w[i] {
            j += 1;
        }
        out.push(LETTERS[w[i] as usize]);
        if j - i > 1 {
            out.push_str(&format!("^{}", j - i));
        }
        i = j;
    }
    out
}

/// Noncommutative polynomial in u, v, w with coefficients in Q(q). After
/// reduction every stored word is irreducible for the configured rules.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct NFPoly {
    terms: BTreeMap<Word, QScalar>,
}

impl NFPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Vec::new(), QScalar::one())
    }

    pub fn constant(c: QScalar) -> Self {
        Self::monomial(Vec::new(), c)
    }

    pub fn monomial(w: Word, c: QScalar) -> Self {
        let mut p = Self::zero();
        p.add_term(w, &c);
        p
    }

    pub fn word(w: Word) -> Self {
        Self::monomial(w, QScalar::one())
    }

    pub fn generator(l: Letter) -> Self {
        Self::word(vec![l])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, QScalar)>) -> Self {
        let mut p = Self::zero();
        for (w, c) in terms {
            p.add_term(w, &c);
        }
        p
    }

    pub fn add_term(&mut self, w: Word, c: &QScalar) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(w).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add_scaled(&mut self, other: &NFPoly, s: &QScalar) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), &(c * s));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &QScalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &[Letter]) -> QScalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// Coefficient of `u^a v^b w^e`.
    pub fn coeff_of(&self, a: u32, b: u32, e: u32) -> QScalar {
        self.coeff(&sorted_word(a, b, e))
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Vec::len).max()
    }

    pub fn add(&self, other: &NFPoly) -> NFPoly {
        let mut out = self.clone();
        out.add_scaled(other, &QScalar::one());
        out
    }

    pub fn sub(&self, other: &NFPoly) -> NFPoly {
        let mut out = self.clone();
        out.add_scaled(other, &-QScalar::one());
        out
    }

    pub fn scale(&self, s: &QScalar) -> NFPoly {
        let mut out = NFPoly::zero();
        out.add_scaled(self, s);
        out
    }

    /// Free (unreduced) product: concatenation of words.
    pub fn concat(&self, other: &NFPoly) -> NFPoly {
        let mut out = NFPoly::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                out.add_term(w, &(ca * cb));
            }
        }
        out
    }

    /// Apply `f` to every coefficient (e.g. evaluation at a sample `q`).
    pub fn try_map_coeffs(&self, f: impl Fn(&QScalar) -> Result<QScalar>) -> Result<NFPoly> {
        let mut out = NFPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), &f(c)?);
        }
        Ok(out)
    }

    /// JSON key for a word: `"u^a v^b w^e"` for ordered words, the raw
    /// letters otherwise.
    pub fn key(w: &[Letter]) -> String {
        match exponents(w) {
            Some((a, b, e)) => format!("u^{a} v^{b} w^{e}"),
            None => word_string(w),
        }
    }

    pub fn parse_key(key: &str) -> Result<Word> {
        let parts: Vec<&str> = key.split_whitespace().collect();
        if parts.len() == 3 && parts.iter().all(|p| p.contains('^')) {
            let mut exps = [0u32; 3];
            for (i, (part, letter)) in parts.iter().zip(LETTERS).enumerate() {
                let (l, e) = part.split_once('^').expect("checked above");
                if !l.starts_with(letter) || l.len() != 1 {
                    return Err(Error::Parse(format!("bad monomial key {key:?}")));
                }
                exps[i] = e.parse().map_err(|_| Error::Parse(format!("bad exponent in {key:?}")))?;
            }
            Ok(sorted_word(exps[0], exps[1], exps[2]))
        } else {
            parse_word(key)
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> = self
            .terms
            .iter()
            .map(|(w, c)| (Self::key(w), serde_json::Value::String(c.to_string())))
            .collect();
        serde_json::Value::Object(map)
    }

    pub fn from_json(v: &serde_json::Value) -> Result<NFPoly> {
        let obj = v.as_object().ok_or_else(|| Error::Parse("expected a JSON object".into()))?;
        let mut out = NFPoly::zero();
        for (k, c) in obj {
            let s = c.as_str().ok_or_else(|| Error::Parse(format!("coefficient of {k} is not a string")))?;
            out.add_term(Self::parse_key(k)?, &s.parse()?);
        }
        Ok(out)
    }

    /// Terms ordered by decreasing degree, then lexicographically.
    fn display_order(&self) -> Vec<(&Word, &QScalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then_with(|| a.0.cmp(b.0)));
        v
    }
}

/// Rendered scalars with internal spaces are sums or quotients by sums.
fn is_compound(s: &str) -> bool {
    s.contains(' ')
}

impl fmt::Display for NFPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.display_order().into_iter().enumerate() {
            let neg_lead = !is_compound(&c.to_string()) && c.to_string().starts_with('-');
            let c = if neg_lead { -c } else { c.clone() };
            let sign = match (i, neg_lead) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            let cs = c.to_string();
            let body = if w.is_empty() {
                if is_compound(&cs) && i > 0 { format!("({cs})") } else { cs }
            } else if c.is_one() {
                monomial_string(w)
            } else if is_compound(&cs) {
                format!("({cs})*{}", monomial_string(w))
            } else {
                format!("{cs}*{}", monomial_string(w))
            };
            write!(f, "{sign}{body}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for NFPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NFPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words_and_keys() {
        let w = parse_word("uvvw").unwrap();
        assert_eq!(w, vec![0, 1, 1, 2]);
        assert_eq!(exponents(&w), Some((1, 2, 1)));
        assert_eq!(exponents(&parse_word("wv").unwrap()), None);
        assert_eq!(monomial_string(&w), "uv^2w");
        assert_eq!(NFPoly::key(&w), "u^1 v^2 w^1");
        assert_eq!(NFPoly::parse_key("u^1 v^2 w^1").unwrap(), w);
        assert_eq!(NFPoly::parse_key("wv").unwrap(), vec![2, 1]);
        assert!(parse_word("ux").is_err());
    }

    #[test]
    fn rendering() {
        let p = NFPoly::from_terms([
            (parse_word("uv").unwrap(), QScalar::q().pow(2)),
            (parse_word("u").unwrap(), QScalar::from_int(4)),
        ]);
        assert_eq!(p.to_string(), "q^2*uv + 4*u");
        let r = NFPoly::from_terms([
            (vec![], QScalar::from_ratio(5, 4)),
            (parse_word("vv").unwrap(), QScalar::from_ratio(-1, 4)),
        ]);
        assert_eq!(r.to_string(), "-1/4*v^2 + 5/4");
        assert_eq!(NFPoly::zero().to_string(), "0");
    }

    #[test]
    fn json_round_trip() {
        let p = NFPoly::from_terms([
            (parse_word("uv").unwrap(), QScalar::q().pow(2)),
            (parse_word("wv").unwrap(), "1/(q^2 + 1)".parse().unwrap()),
            (vec![], QScalar::from_int(-3)),
        ]);
        assert_eq!(NFPoly::from_json(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn cancellation_drops_terms() {
        let mut p = NFPoly::word(vec![0]);
        p.add_term(vec![0], &QScalar::from_int(-1));
        assert!(p.is_zero());
    }
}
