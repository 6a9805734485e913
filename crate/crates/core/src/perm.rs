//! Permutations of the points `1..=degree`.
//!
//! Composition is **left-to-right**: `(a * b)(i) = b(a(i))`, i.e. apply `a`
//! first. With this convention conjugation is the right action
//! `a^g = g^-1 * a * g`, so `(a^g)^h = a^(g*h)` holds on the nose.

use std::fmt;

use crate::error::{Error, Result};

/// A bijection of `{1..degree}`, stored 0-based internally.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree as u32).collect(),
        }
    }

    /// Build from a 0-based image vector; validates bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::Parse("degree must be positive".into()));
        }
        let mut seen = vec![false; n];
        for &v in &images {
            if v as usize >= n || seen[v as usize] {
                return Err(Error::Parse("image vector is not a bijection".into()));
            }
            seen[v as usize] = true;
        }
        Ok(Perm { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 0-based point `i`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i as u32 == v)
    }

    /// Parse whitespace-separated disjoint cycles of 1-based points,
    /// e.g. `"(1 2 3)(4 5)"`. Empty text or `"()"` is the identity.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::Parse("degree must be positive".into()));
        }
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        let mut chars = text.chars().peekable();
        loop {
            // skip whitespace between cycles
            while matches!(chars.peek(), Some(c) if c.is_whitespace()) {
                chars.next();
            }
            match chars.next() {
                None => break,
                Some('(') => {}
                Some(c) => return Err(Error::Parse(format!("unexpected character '{c}'"))),
            }
            // read the cycle body
            let mut cycle: Vec<usize> = Vec::new();
            let mut num = String::new();
            loop {
                match chars.next() {
                    None => return Err(Error::Parse("unclosed '('".into())),
                    Some(c) if c.is_ascii_digit() => num.push(c),
                    Some(c) if c.is_whitespace() || c == ',' || c == ')' => {
                        if !num.is_empty() {
                            let p: usize = num
                                .parse()
                                .map_err(|_| Error::Parse(format!("bad point '{num}'")))?;
                            if p == 0 || p > degree {
                                return Err(Error::Parse(format!(
                                    "point {p} out of range 1..{degree}"
                                )));
                            }
                            if used[p - 1] {
                                return Err(Error::Parse(format!("point {p} repeated")));
                            }
                            used[p - 1] = true;
                            cycle.push(p - 1);
                            num.clear();
                        }
                        if c == ')' {
                            break;
                        }
                    }
                    Some(c) => return Err(Error::Parse(format!("unexpected character '{c}'"))),
                }
            }
            if cycle.len() >= 2 {
                for k in 0..cycle.len() {
                    images[cycle[k]] = cycle[(k + 1) % cycle.len()] as u32;
                }
            }
        }
        Ok(Perm { images })
    }

    /// Left-to-right composite: apply `self`, then `other`.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.compose_raw(other))
    }

    pub(crate) fn compose_raw(&self, other: &Perm) -> Perm {
        let images = self.images.iter().map(|&i| other.images[i as usize]).collect();
        Perm { images }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u32; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize] = i as u32;
        }
        Perm { images }
    }

    /// `self^g = g^-1 * self * g` (left-to-right products).
    pub fn conjugate(&self, g: &Perm) -> Result<Perm> {
        if self.degree() != g.degree() {
            return Err(Error::DegreeMismatch(self.degree(), g.degree()));
        }
        Ok(g.inverse().compose_raw(self).compose_raw(g))
    }

    /// Multiplicative order (lcm of cycle lengths).
    pub fn order(&self) -> u64 {
        let mut ord: u64 = 1;
        for c in self.cycles_including_fixed() {
            ord = lcm(ord, c.len() as u64);
        }
        ord
    }

    fn cycles_including_fixed(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut p = self.apply(start);
            while p != start {
                seen[p] = true;
                cyc.push(p);
                p = self.apply(p);
            }
            out.push(cyc);
        }
        out
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

impl fmt::Display for Perm {
    /// Cycle notation with 1-based points; identity prints `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<Vec<usize>> = self
            .cycles_including_fixed()
            .into_iter()
            .filter(|c| c.len() >= 2)
            .collect();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(text: &str, degree: usize) -> Perm {
        Perm::parse(text, degree).unwrap()
    }

    #[test]
    fn parse_transposition() {
        let t = p("(1 2)", 4);
        assert_eq!(t.apply(0), 1);
        assert_eq!(t.apply(1), 0);
        assert_eq!(t.apply(2), 2);
        assert_eq!(t.apply(3), 3);
    }

    #[test]
    fn parse_identity_forms() {
        assert!(p("()", 3).is_identity());
        assert!(p("", 3).is_identity());
        assert!(p("  ", 3).is_identity());
    }

    #[test]
    fn four_cycle_fourth_power_is_identity() {
        // oracle: repeated composition
        let c = p("(1 2 3 4)", 4);
        let mut acc = Perm::identity(4);
        for _ in 0..4 {
            acc = acc.compose(&c).unwrap();
        }
        assert!(acc.is_identity());
        assert_eq!(c.order(), 4);
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(Perm::parse("(1 5)", 4).is_err()); // out of range
        assert!(Perm::parse("(1 1)", 4).is_err()); // repeated point
        assert!(Perm::parse("(1 2)(2 3)", 4).is_err()); // repeated across cycles
        assert!(Perm::parse("(1 2", 4).is_err()); // unclosed
        assert!(Perm::parse("1 2)", 4).is_err()); // stray text
        assert!(Perm::parse("(0 1)", 4).is_err()); // points are 1-based
    }

    #[test]
    fn compose_left_to_right() {
        // (1 2)*(2 3) = (1 3 2): 1->2->3, 2->1, 3->... check pointwise.
        let a = p("(1 2)", 3);
        let b = p("(2 3)", 3);
        let ab = a.compose(&b).unwrap();
        assert_eq!(ab, p("(1 3 2)", 3));
    }

    #[test]
    fn compose_inverse_and_identity() {
        let a = p("(1 2 3)(4 5)", 5);
        assert!(a.compose(&a.inverse()).unwrap().is_identity());
        assert_eq!(Perm::identity(5).compose(&a).unwrap(), a);
    }

    #[test]
    fn compose_degree_mismatch() {
        assert!(p("(1 2)", 3).compose(&p("(1 2)", 4)).is_err());
    }

    #[test]
    fn conjugate_examples() {
        // (1 3)^(2 3) = (1 2), by pointwise evaluation
        let a = p("(1 3)", 3);
        let g = p("(2 3)", 3);
        assert_eq!(a.conjugate(&g).unwrap(), p("(1 2)", 3));
        assert_eq!(a.conjugate(&Perm::identity(3)).unwrap(), a);
        assert!(Perm::identity(3).conjugate(&g).unwrap().is_identity());
    }

    #[test]
    fn display_roundtrip() {
        let a = p("(1 2 3)(4 5)", 6);
        assert_eq!(a.to_string(), "(1 2 3)(4 5)");
        assert_eq!(Perm::parse(&a.to_string(), 6).unwrap(), a);
        assert_eq!(Perm::identity(3).to_string(), "()");
    }

    fn arb_perm(degree: usize) -> impl Strategy<Value = Perm> {
        Just(()).prop_perturb(move |_, mut rng| {
            let mut v: Vec<u32> = (0..degree as u32).collect();
            // Fisher-Yates with proptest's rng
            for i in (1..degree).rev() {
                let j = (rng.next_u64() % (i as u64 + 1)) as usize;
                v.swap(i, j);
            }
            Perm { images: v }
        })
    }

    proptest! {
        #[test]
        fn compose_is_associative((a, b, c) in (arb_perm(7), arb_perm(7), arb_perm(7))) {
            let l = a.compose(&b).unwrap().compose(&c).unwrap();
            let r = a.compose(&b.compose(&c).unwrap()).unwrap();
            prop_assert_eq!(l, r);
        }

        #[test]
        fn conjugation_is_right_action((a, g, h) in (arb_perm(7), arb_perm(7), arb_perm(7))) {
            let l = a.conjugate(&g).unwrap().conjugate(&h).unwrap();
            let r = a.conjugate(&g.compose(&h).unwrap()).unwrap();
            prop_assert_eq!(l, r);
        }

        #[test]
        fn inverse_cancels(a in arb_perm(8)) {
            prop_assert!(a.compose(&a.inverse()).unwrap().is_identity());
            prop_assert!(a.inverse().compose(&a).unwrap().is_identity());
        }
    }
}
