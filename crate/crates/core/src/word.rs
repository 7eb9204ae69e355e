use std::fmt;

/// A generator or its inverse, 1-based: `+i` is the generator, `-i` its inverse.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(i32);

impl Letter {
    pub fn new(index: usize, inverse: bool) -> Self {
        assert!(index >= 1, "generator indices are 1-based");
        let i = index as i32;
        Letter(if inverse { -i } else { i })
    }

    pub fn pos(index: usize) -> Self {
        Self::new(index, false)
    }

    pub fn neg(index: usize) -> Self {
        Self::new(index, true)
    }

    pub fn index(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    pub fn is_inverse(self) -> bool {
        self.0 < 0
    }

    pub fn inverse(self) -> Self {
        Letter(-self.0)
    }

    pub fn raw(self) -> i32 {
        self.0
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Freely reduces in place; returns the reduced list.
pub fn free_reduce_letters(letters: impl IntoIterator<Item = Letter>) -> Vec<Letter> {
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

pub fn invert_letters(letters: &[Letter]) -> Vec<Letter> {
    letters.iter().rev().map(|l| l.inverse()).collect()
}

/// Parses `x1 x2^-1 ...` for prefix `x`. Accepts whitespace or `*` separators.
pub(crate) fn parse_letters(text: &str, prefix: char) -> Result<Vec<Letter>, String> {
    let mut out = Vec::new();
    for tok in text.split(|c: char| c.is_whitespace() || c == '*').filter(|t| !t.is_empty()) {
        let body = tok.strip_prefix(prefix).ok_or_else(|| format!("token `{tok}` does not start with `{prefix}`"))?;
        let (idx, exp) = match body.split_once('^') {
            Some((i, e)) => (i, e.parse::<i32>().map_err(|_| format!("bad exponent in `{tok}`"))?),
            None => (body, 1),
        };
        let idx: usize = idx.parse().map_err(|_| format!("bad index in `{tok}`"))?;
        if idx == 0 {
            return Err(format!("index 0 in `{tok}`"));
        }
        let letter = Letter::new(idx, exp < 0);
        for _ in 0..exp.unsigned_abs() {
            out.push(letter);
        }
    }
    Ok(out)
}

pub(crate) fn fmt_letters(f: &mut fmt::Formatter<'_>, letters: &[Letter], prefix: char) -> fmt::Result {
    for (k, l) in letters.iter().enumerate() {
        if k > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{prefix}{}", l.index())?;
        if l.is_inverse() {
            f.write_str("^-1")?;
        }
    }
    Ok(())
}
