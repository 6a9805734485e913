//! Plain-text group files and the built-in catalog families.
//!
//! A group file is line-oriented ASCII:
//!
//! ```text
//! name: S4
//! degree: 4
//! gens: (1 2), (1 2 3 4)
//! ```

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{order_cap, Group};
use crate::perm::Perm;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupFile {
    pub name: String,
    pub degree: usize,
    pub gens: Vec<String>,
}

impl GroupFile {
    pub fn parse(text: &str) -> Result<GroupFile> {
        let mut name = None;
        let mut degree = None;
        let mut gens = None;
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("expected 'key: value', got '{line}'")))?;
            let value = value.trim();
            match key.trim() {
                "name" => name = Some(value.to_string()),
                "degree" => {
                    degree = Some(
                        value
                            .parse::<usize>()
                            .map_err(|_| Error::Parse(format!("bad degree '{value}'")))?,
                    )
                }
                "gens" => {
                    gens = Some(
                        value
                            .split(',')
                            .map(|g| g.trim().to_string())
                            .filter(|g| !g.is_empty())
                            .collect::<Vec<_>>(),
                    )
                }
                other => return Err(Error::Parse(format!("unknown field '{other}'"))),
            }
        }
        let file = GroupFile {
            name: name.ok_or_else(|| Error::Parse("missing 'name' field".into()))?,
            degree: degree.ok_or_else(|| Error::Parse("missing 'degree' field".into()))?,
            gens: gens.ok_or_else(|| Error::Parse("missing 'gens' field".into()))?,
        };
        if file.degree == 0 {
            return Err(Error::Parse("degree must be positive".into()));
        }
        Ok(file)
    }

    /// Canonical emission: `parse(emit(f)) == f` after one round of
    /// canonicalization through `Perm` display.
    pub fn emit(&self) -> String {
        format!(
            "name: {}\ndegree: {}\ngens: {}\n",
            self.name,
            self.degree,
            self.gens.join(", ")
        )
    }

    pub fn build(&self) -> Result<Arc<Group>> {
        let gens = self
            .gens
            .iter()
            .map(|g| Perm::parse(g, self.degree))
            .collect::<Result<Vec<_>>>()?;
        Group::from_generators(gens, self.degree)
    }

    fn from_perms(name: &str, degree: usize, gens: Vec<Perm>) -> GroupFile {
        GroupFile {
            name: name.to_string(),
            degree,
            gens: gens.iter().map(|g| g.to_string()).collect(),
        }
    }
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

fn cycle(points: std::ops::Range<u32>, degree: usize) -> Perm {
    let points: Vec<u32> = points.collect();
    let mut images: Vec<u32> = (0..degree as u32).collect();
    for k in 0..points.len() {
        images[points[k] as usize] = points[(k + 1) % points.len()];
    }
    Perm::from_images(images).expect("cycle is a bijection")
}

fn symmetric(n: usize) -> GroupFile {
    let swap = Perm::parse("(1 2)", n).expect("valid");
    let rot = cycle(0..n as u32, n);
    GroupFile::from_perms(&format!("S{n}"), n, vec![swap, rot])
}

fn alternating(n: usize) -> GroupFile {
    // <(1 2 3), full n-cycle> for odd n; <(1 2 3), (2 .. n)-cycle> for even n
    let t = Perm::parse("(1 2 3)", n).expect("valid");
    let c = if n % 2 == 1 {
        cycle(0..n as u32, n)
    } else {
        cycle(1..n as u32, n)
    };
    GroupFile::from_perms(&format!("A{n}"), n, vec![t, c])
}

fn cyclic(n: usize) -> GroupFile {
    GroupFile::from_perms(&format!("C{n}"), n, vec![cycle(0..n as u32, n)])
}

/// Dihedral of order `n` (n even, n >= 6) on `n/2` points: rotation plus the
/// reflection fixing point 1.
fn dihedral(n: usize) -> Result<GroupFile> {
    if !n.is_multiple_of(2) || n < 6 {
        return Err(Error::Invalid(format!(
            "D{n}: dihedral family needs even order >= 6"
        )));
    }
    let m = n / 2;
    let rot = cycle(0..m as u32, m);
    let refl_images: Vec<u32> = (0..m as u32).map(|i| (m as u32 - i) % m as u32).collect();
    let refl = Perm::from_images(refl_images).expect("reflection is a bijection");
    Ok(GroupFile::from_perms(&format!("D{n}"), m, vec![rot, refl]))
}

fn quaternion() -> GroupFile {
    GroupFile {
        name: "Q8".to_string(),
        degree: 8,
        gens: vec!["(1 2 3 4)(5 6 7 8)".into(), "(1 5 3 7)(2 8 4 6)".into()],
    }
}

/// SL(2,3) acting on the 8 nonzero vectors of F_3^2 (lex order).
fn sl23() -> GroupFile {
    let vectors: Vec<(u32, u32)> = (0..3u32)
        .flat_map(|a| (0..3u32).map(move |b| (a, b)))
        .filter(|&(a, b)| (a, b) != (0, 0))
        .collect();
    let index = |v: (u32, u32)| vectors.iter().position(|&w| w == v).expect("nonzero") as u32;
    let act = |m: [[u32; 2]; 2]| {
        let images: Vec<u32> = vectors
            .iter()
            .map(|&(a, b)| index(((m[0][0] * a + m[1][0] * b) % 3, (m[0][1] * a + m[1][1] * b) % 3)))
            .collect();
        Perm::from_images(images).expect("linear action is a bijection")
    };
    // [[1,1],[0,1]] and [[0,1],[-1,0]] generate SL(2,3)
    GroupFile::from_perms("SL23", 8, vec![act([[1, 1], [0, 1]]), act([[0, 1], [2, 0]])])
}

fn direct_product(name: &str, a: &GroupFile, b: &GroupFile) -> GroupFile {
    let degree = a.degree + b.degree;
    let mut gens: Vec<String> = Vec::new();
    for g in &a.gens {
        let p = Perm::parse(g, a.degree).expect("valid family generator");
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for (i, image) in images.iter_mut().enumerate().take(a.degree) {
            *image = p.apply(i) as u32;
        }
        gens.push(Perm::from_images(images).expect("bijection").to_string());
    }
    for g in &b.gens {
        let p = Perm::parse(g, b.degree).expect("valid family generator");
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for i in 0..b.degree {
            images[a.degree + i] = (a.degree + p.apply(i)) as u32;
        }
        gens.push(Perm::from_images(images).expect("bijection").to_string());
    }
    GroupFile {
        name: name.to_string(),
        degree,
        gens,
    }
}

fn family_order(file: &GroupFile) -> Result<u64> {
    // cheap documented orders for cap checks, without building the group
    let name = &file.name;
    let order = if let Some(n) = name.strip_prefix('S').and_then(|s| s.parse::<u64>().ok()) {
        factorial(n)
    } else if let Some(n) = name.strip_prefix('A').and_then(|s| s.parse::<u64>().ok()) {
        factorial(n) / 2
    } else if let Some(n) = name.strip_prefix('D').and_then(|s| s.parse::<u64>().ok()) {
        n
    } else if let Some(n) = name.strip_prefix('C').and_then(|s| s.parse::<u64>().ok()) {
        n
    } else {
        return Ok(0); // unknown: let the builder decide
    };
    Ok(order)
}

fn single_family(token: &str) -> Result<GroupFile> {
    let token = token.trim();
    if token == "Q8" {
        return Ok(quaternion());
    }
    if token == "SL23" {
        return Ok(sl23());
    }
    if let Some(n) = token.strip_prefix('S').and_then(|s| s.parse::<usize>().ok()) {
        if n < 2 {
            return Err(Error::Invalid(format!("{token}: need n >= 2")));
        }
        return Ok(symmetric(n));
    }
    if let Some(n) = token.strip_prefix('A').and_then(|s| s.parse::<usize>().ok()) {
        if n < 3 {
            return Err(Error::Invalid(format!("{token}: need n >= 3")));
        }
        return Ok(alternating(n));
    }
    if let Some(n) = token.strip_prefix('D').and_then(|s| s.parse::<usize>().ok()) {
        return dihedral(n);
    }
    if let Some(n) = token.strip_prefix('C').and_then(|s| s.parse::<usize>().ok()) {
        if n < 1 {
            return Err(Error::Invalid(format!("{token}: need n >= 1")));
        }
        return Ok(cyclic(n));
    }
    Err(Error::Parse(format!("unknown family '{token}'")))
}

fn family_token(token: &str) -> Result<GroupFile> {
    let token = token.trim();
    if token.contains('x') {
        let parts: Vec<&str> = token.split('x').collect();
        let mut files: Vec<GroupFile> = parts
            .iter()
            .map(|p| single_family(p))
            .collect::<Result<Vec<_>>>()?;
        let mut acc = files.remove(0);
        for f in files {
            let name = format!("{}x{}", acc.name, f.name);
            acc = direct_product(&name, &acc, &f);
        }
        acc.name = token.to_string();
        return Ok(acc);
    }
    single_family(token)
}

/// Parse a family spec such as `"S3..S5, A4, D8, C12, Q8, S3xC3"` into
/// group files. Ranges like `S3..S5` expand over the numeric parameter.
pub fn builtin_catalog(spec: &str) -> Result<Vec<GroupFile>> {
    let mut out = Vec::new();
    for item in spec.split(',') {
        let item = item.trim();
        if item.is_empty() {
            continue;
        }
        if let Some((lo, hi)) = item.split_once("..") {
            let prefix: String = lo.chars().take_while(|c| c.is_ascii_alphabetic()).collect();
            let lo_n: usize = lo[prefix.len()..]
                .parse()
                .map_err(|_| Error::Parse(format!("bad range '{item}'")))?;
            let hi_n: usize = hi
                .trim_start_matches(prefix.as_str())
                .parse()
                .map_err(|_| Error::Parse(format!("bad range '{item}'")))?;
            for n in lo_n..=hi_n {
                out.push(family_token(&format!("{prefix}{n}"))?);
            }
        } else {
            out.push(family_token(item)?);
        }
    }
    let cap = order_cap();
    for f in &out {
        let order = family_order(f)?;
        if order > cap {
            return Err(Error::CapExceeded { order, cap });
        }
    }
    Ok(out)
}

/// The ten-group catalog the verification suite runs by default.
pub fn default_catalog() -> Vec<GroupFile> {
    builtin_catalog("S3, S4, A4, D8, D12, Q8, C12, C30, S3xC3, SL23")
        .expect("default catalog is valid")
}
