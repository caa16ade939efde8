//! Laurent polynomials in `q^{1/2}` with integer coefficients.
//!
//! Exponents are stored doubled: the key `h` stands for `q^{h/2}`. That
//! keeps all arithmetic in plain integers while allowing the genuinely
//! half-integral powers that odd-height twists produce.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

/// Sparse Laurent polynomial in `q^{1/2}`: half-exponent to nonzero
/// coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct LaurentHalf(BTreeMap<i64, i64>);

impl LaurentHalf {
    pub fn zero() -> Self {
        LaurentHalf(BTreeMap::new())
    }

    pub fn one() -> Self {
        Self::monomial_half(0)
    }

    /// `q^{h/2}`.
    pub fn monomial_half(h: i64) -> Self {
        let mut m = BTreeMap::new();
        m.insert(h, 1);
        LaurentHalf(m)
    }

    /// `q^n`.
    pub fn monomial(n: i64) -> Self {
        Self::monomial_half(2 * n)
    }

    pub fn constant(c: i64) -> Self {
        let mut out = Self::zero();
        out.add_term(0, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff_half(&self, h: i64) -> i64 {
        self.0.get(&h).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.0.iter().map(|(&h, &c)| (h, c))
    }

    pub fn add_term(&mut self, h: i64, c: i64) {
        use std::collections::btree_map::Entry;
        if c == 0 {
            return;
        }
        match self.0.entry(h) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn add(&self, other: &LaurentHalf) -> LaurentHalf {
        let mut out = self.clone();
        for (h, c) in other.terms() {
            out.add_term(h, c);
        }
        out
    }

    pub fn sub(&self, other: &LaurentHalf) -> LaurentHalf {
        let mut out = self.clone();
        for (h, c) in other.terms() {
            out.add_term(h, -c);
        }
        out
    }

    pub fn scale(&self, k: i64) -> LaurentHalf {
        let mut out = LaurentHalf::zero();
        for (h, c) in self.terms() {
            out.add_term(h, k * c);
        }
        out
    }

    pub fn mul(&self, other: &LaurentHalf) -> LaurentHalf {
        let mut out = LaurentHalf::zero();
        for (h1, c1) in self.terms() {
            for (h2, c2) in other.terms() {
                out.add_term(h1 + h2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for LaurentHalf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (h, c) in self.terms() {
            let mag = c.abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let power = match h {
                0 => String::new(),
                2 => "q".to_string(),
                h if h % 2 == 0 => format!("q^{}", h / 2),
                h => format!("q^{{{h}/2}}"),
            };
            if power.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == 1 {
                write!(f, "{power}")?;
            } else {
                write!(f, "{mag}{power}")?;
            }
        }
        Ok(())
    }
}
