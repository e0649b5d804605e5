//! Permutations of `{1..n}`.
//!
//! Products are read left to right: `p.then(&q)` applies `p` first and `q`
//! second, so `(p.then(&q))(i) = q(p(i))`. Every other module relies on this
//! single convention.
//!
//! Points are 1-based in text (cycle notation) and 0-based internally.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, ParseError, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree as u32).collect() }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n {
                return Err(ParseError::PointOutOfRange { point: x + 1, degree: n }.into());
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(ParseError::RepeatedPoint { point: x + 1 }.into());
            }
        }
        Ok(Permutation { images })
    }

    /// 1-based images, as they appear in external formats.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let mut v = Vec::with_capacity(images.len());
        for &x in images {
            if x == 0 {
                return Err(ParseError::PointOutOfRange { point: 0, degree: images.len() }.into());
            }
            v.push((x - 1) as u32);
        }
        Self::from_images(v)
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    /// Parses cycle notation such as `(1 2 3)(4 5)` on `degree` points.
    pub fn parse(text: &str, degree: usize) -> Result<Self, ParseError> {
        parse_cycles(text, degree)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 0-based image table.
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// 1-based image table.
    pub fn one_based_images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    /// Image of a 0-based point.
    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch { left: self.degree(), right: other.degree() });
        }
        Ok(self.then_unchecked(other))
    }

    pub(crate) fn then_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation { images: self.images.iter().map(|&x| other.images[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// Smallest `k ≥ 1` with `self^k = 1`.
    pub fn order(&self) -> usize {
        let mut seen = vec![false; self.degree()];
        let mut order = 1usize;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.apply(x);
                len += 1;
            }
            order = lcm(order, len);
        }
        order
    }

    /// Disjoint cycles of length ≥ 2, 0-based, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Relabels onto a larger point set, shifting every point by `offset`.
    pub fn shifted(&self, offset: usize, degree: usize) -> Permutation {
        assert!(offset + self.degree() <= degree);
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[i + offset] = x + offset as u32;
        }
        Permutation { images }
    }

    /// Cycle notation with comma-separated points, e.g. `(1,2,3)(4,5)`.
    pub fn to_comma_string(&self) -> String {
        self.format_with(",")
    }

    fn format_with(&self, sep: &str) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        let mut s = String::new();
        for c in cycles {
            s.push('(');
            let pts: Vec<String> = c.iter().map(|p| (p + 1).to_string()).collect();
            s.push_str(&pts.join(sep));
            s.push(')');
        }
        s
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with(" "))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self, self.degree())
    }
}

/// Parses a permutation written as `<degree>:<cycles>`, e.g. `4:(1 2)(3 4)`.
impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (deg, cycles) = s.split_once(':').ok_or_else(|| ParseError::Syntax {
            offset: 0,
            reason: "expected `<degree>:<cycles>`".into(),
        })?;
        let degree: usize = deg.trim().parse().map_err(|_| ParseError::Syntax {
            offset: 0,
            reason: format!("bad degree `{}`", deg.trim()),
        })?;
        Ok(Permutation::parse(cycles, degree)?)
    }
}

fn parse_cycles(text: &str, degree: usize) -> Result<Permutation, ParseError> {
    let bytes = text.as_bytes();
    let mut images: Vec<u32> = (0..degree as u32).collect();
    let mut used = vec![false; degree];
    let mut i = 0;
    let mut cycles = 0;
    let skip_ws = |i: &mut usize| {
        while *i < bytes.len() && bytes[*i].is_ascii_whitespace() {
            *i += 1;
        }
    };
    loop {
        skip_ws(&mut i);
        if i == bytes.len() {
            break;
        }
        if bytes[i] != b'(' {
            return Err(ParseError::Syntax { offset: i, reason: format!("expected `(`, found `{}`", bytes[i] as char) });
        }
        i += 1;
        let mut cycle: Vec<usize> = Vec::new();
        loop {
            skip_ws(&mut i);
            if i == bytes.len() {
                return Err(ParseError::Syntax { offset: i, reason: "unterminated cycle".into() });
            }
            match bytes[i] {
                b')' => {
                    i += 1;
                    break;
                }
                b',' if !cycle.is_empty() => {
                    i += 1;
                    skip_ws(&mut i);
                    if i == bytes.len() || !bytes[i].is_ascii_digit() {
                        return Err(ParseError::Syntax { offset: i, reason: "expected a point after `,`".into() });
                    }
                }
                b'0'..=b'9' => {
                    let start = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    let point: usize = text[start..i].parse().map_err(|_| ParseError::Syntax {
                        offset: start,
                        reason: "point does not fit in an integer".into(),
                    })?;
                    if point == 0 || point > degree {
                        return Err(ParseError::PointOutOfRange { point, degree });
                    }
                    if std::mem::replace(&mut used[point - 1], true) {
                        return Err(ParseError::RepeatedPoint { point });
                    }
                    cycle.push(point - 1);
                }
                c => {
                    return Err(ParseError::Syntax { offset: i, reason: format!("unexpected `{}`", c as char) });
                }
            }
        }
        for (k, &p) in cycle.iter().enumerate() {
            images[p] = cycle[(k + 1) % cycle.len()] as u32;
        }
        cycles += 1;
    }
    if cycles == 0 {
        return Err(ParseError::Syntax { offset: 0, reason: "empty input; write `()` for the identity".into() });
    }
    Ok(Permutation { images })
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Distinct prime divisors in increasing order.
pub fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn is_prime(n: usize) -> bool {
    n >= 2 && prime_divisors(n) == [n]
}

/// Largest power of `p` dividing `n`.
pub fn p_part(mut n: usize, p: usize) -> usize {
    let mut part = 1;
    while n > 0 && n.is_multiple_of(p) {
        n /= p;
        part *= p;
    }
    part
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    #[test]
    fn parses_cycles() {
        assert_eq!(p("(1 2 3)", 3).one_based_images(), vec![2, 3, 1]);
        assert_eq!(p("()", 4), Permutation::identity(4));
        assert_eq!(p("(1 2)(3 4)", 5).one_based_images(), vec![2, 1, 4, 3, 5]);
        assert_eq!(p("  ( 1  2 ) ( 3,4 )  ", 5).one_based_images(), vec![2, 1, 4, 3, 5]);
    }

    #[test]
    fn parse_errors_are_distinct() {
        assert_eq!(Permutation::parse("(1 2)(2 3)", 3), Err(ParseError::RepeatedPoint { point: 2 }));
        assert_eq!(Permutation::parse("(1 4)", 3), Err(ParseError::PointOutOfRange { point: 4, degree: 3 }));
        assert!(matches!(Permutation::parse("(1 2", 3), Err(ParseError::Syntax { .. })));
        assert!(matches!(Permutation::parse("(1 2) x", 3), Err(ParseError::Syntax { .. })));
        assert!(matches!(Permutation::parse("1 2", 3), Err(ParseError::Syntax { .. })));
        assert!(matches!(Permutation::parse("", 3), Err(ParseError::Syntax { .. })));
        assert!(matches!(Permutation::parse("(0 1)", 3), Err(ParseError::PointOutOfRange { .. })));
    }

    #[test]
    fn left_to_right_convention() {
        // (1 2) then (2 3): 1 -> 2 -> 3
        let r = p("(1 2)", 3).then(&p("(2 3)", 3)).unwrap();
        assert_eq!(r.one_based_images(), vec![3, 1, 2]);
        assert_eq!(r, p("(1 3 2)", 3));
        assert!(p("(1 2)", 3).then(&p("(1 2)", 3)).unwrap().is_identity());
        let q = p("(1 3 4)", 4);
        assert_eq!(q.then(&Permutation::identity(4)).unwrap(), q);
    }

    #[test]
    fn compose_rejects_degree_mismatch() {
        assert_eq!(
            p("(1 2)", 2).then(&p("(1 2)", 3)),
            Err(Error::DegreeMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn inverses() {
        assert_eq!(p("(1 2 3)", 3).inverse(), p("(1 3 2)", 3));
        assert_eq!(Permutation::identity(5).inverse(), Permutation::identity(5));
        assert_eq!(p("(1 2)(3 4)", 4).inverse(), p("(1 2)(3 4)", 4));
    }

    #[test]
    fn display_roundtrip_and_order() {
        let q = p("(4 5)(1 3 2)", 6);
        assert_eq!(q.to_string(), "(1 3 2)(4 5)");
        assert_eq!(q.to_comma_string(), "(1,3,2)(4,5)");
        assert_eq!(q.order(), 6);
        assert_eq!("6:(1 3 2)(4 5)".parse::<Permutation>().unwrap(), q);
    }

    #[test]
    fn arithmetic_helpers() {
        assert_eq!(prime_divisors(144), vec![2, 3]);
        assert_eq!(prime_divisors(1), Vec::<usize>::new());
        assert_eq!(p_part(24, 2), 8);
        assert_eq!(p_part(24, 5), 1);
        assert!(is_prime(13) && !is_prime(1) && !is_prime(9));
    }
}
