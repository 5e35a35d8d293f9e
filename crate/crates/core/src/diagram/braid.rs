use std::fmt;

use super::{ArcId, DiagramError, GaussBuilder, LinkDiagram, Port, Sign, Strand};

/// A word in the braid generators on `strands` strands. Letter `i > 0` is
/// `σ_i`, letter `-i` is its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, DiagramError> {
        if strands == 0 {
            return Err(DiagramError::Syntax {
                line: 1,
                column: 1,
                reason: "a braid needs at least one strand".into(),
            });
        }
        for (k, &l) in letters.iter().enumerate() {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(DiagramError::GeneratorOutOfRange {
                    letter: l as i64,
                    strands,
                    line: 1,
                    column: k + 1,
                });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord {
            strands: strands.max(1),
            letters: Vec::new(),
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|l| l.signum() as i64).sum()
    }

    /// `perm[p]` is the bottom position of the strand ending at top position `p`
    /// read the other way: a strand starting at position `p` ends at `perm[p]`.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            at.swap(i, i + 1);
        }
        let mut perm = vec![0; self.strands];
        for (pos, &start) in at.iter().enumerate() {
            perm[start] = pos;
        }
        perm
    }

    /// Number of cycles of the underlying permutation.
    pub fn closure_components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut cycles = 0;
        for s in 0..self.strands {
            if !seen[s] {
                cycles += 1;
                let mut x = s;
                while !seen[x] {
                    seen[x] = true;
                    x = perm[x];
                }
            }
        }
        cycles
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// Crossing-switched word.
    pub fn mirror(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().map(|l| -l).collect(),
        }
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord, DiagramError> {
        if self.strands != other.strands {
            return Err(DiagramError::BadReference(format!(
                "cannot compose braids on {} and {} strands",
                self.strands, other.strands
            )));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    /// Adds a strand on the right and appends `σ_n^{sign}`.
    pub fn stabilize(&self, positive: bool) -> BraidWord {
        let n = self.strands as i32;
        let mut letters = self.letters.clone();
        letters.push(if positive { n } else { -n });
        BraidWord {
            strands: self.strands + 1,
            letters,
        }
    }

    /// Braid closure with the blackboard framing.
    pub fn closure(&self) -> LinkDiagram {
        self.closure_with_bottoms().0
    }

    /// The closure and the arc through each bottom position.
    fn closure_with_bottoms(&self) -> (LinkDiagram, Vec<ArcId>) {
        let mut b = GaussBuilder::new();
        let bottoms: Vec<usize> = (0..self.strands).map(|_| b.node()).collect();
        let mut ends: Vec<Port> = bottoms.iter().map(|&n| Port::Node(n)).collect();
        b.braid(&mut ends, 0, &self.letters);
        for (end, &n) in ends.into_iter().zip(&bottoms) {
            b.connect(end, Port::Node(n));
        }
        b.build().expect("braid closure is always well formed")
    }

    /// Component of [`closure`](Self::closure) through each bottom position.
    pub fn strand_components(&self) -> Vec<usize> {
        let (l, arcs) = self.closure_with_bottoms();
        let of = l.arc_components();
        arcs.iter().map(|a| of[a.0]).collect()
    }

    /// Blackboard cable: the strand starting at bottom position `p` becomes
    /// `widths[p]` parallel strands. Returns `None` when every width is zero.
    pub fn cable(&self, widths: &[usize]) -> Result<Option<BraidWord>, DiagramError> {
        if widths.len() != self.strands {
            return Err(DiagramError::BadReference(format!(
                "{} widths for {} strands",
                widths.len(),
                self.strands
            )));
        }
        let total: usize = widths.iter().sum();
        if total == 0 {
            return Ok(None);
        }
        let mut at: Vec<usize> = (0..self.strands).collect();
        let mut letters = Vec::new();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize;
            let (left, right) = (at[i - 1], at[i]);
            let start: usize = at[..i - 1].iter().map(|&s| widths[s]).sum();
            let sign = l.signum();
            // the left block passes the right one, its rightmost copy first
            for a in (0..widths[left]).rev() {
                for b in 0..widths[right] {
                    letters.push(sign * (start + a + b + 1) as i32);
                }
            }
            at.swap(i - 1, i);
        }
        Ok(Some(BraidWord {
            strands: total,
            letters,
        }))
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "braid {}:", self.strands)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for BraidWord {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_braid(s)
    }
}

/// Parses `braid <n>: <i1> <i2> ...`. Blank lines and lines starting with `#`
/// are ignored; exactly one braid must be present.
pub fn parse_braid(text: &str) -> Result<BraidWord, DiagramError> {
    let mut found: Option<BraidWord> = None;
    for (ln, raw) in text.lines().enumerate() {
        let line = ln + 1;
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if found.is_some() {
            return Err(DiagramError::Syntax {
                line,
                column: raw.len() - trimmed.len() + 1,
                reason: "more than one braid in input".into(),
            });
        }
        found = Some(parse_line(raw, line)?);
    }
    found.ok_or(DiagramError::Syntax {
        line: 1,
        column: 1,
        reason: "empty input".into(),
    })
}

fn tokens(raw: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in raw.char_indices() {
        if ch.is_whitespace() || ch == ':' {
            if let Some(s) = start.take() {
                out.push((s, &raw[s..i]));
            }
            if ch == ':' {
                out.push((i, &raw[i..i + 1]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, &raw[s..]));
    }
    out.into_iter()
}

fn parse_line(raw: &str, line: usize) -> Result<BraidWord, DiagramError> {
    let syntax = |col: usize, reason: String| DiagramError::Syntax {
        line,
        column: col + 1,
        reason,
    };
    let mut toks = tokens(raw);
    match toks.next() {
        Some((_, "braid")) => {}
        Some((c, t)) => return Err(syntax(c, format!("expected `braid`, found `{t}`"))),
        None => return Err(syntax(0, "expected `braid`".into())),
    }
    let strands = match toks.next() {
        Some((c, t)) => t
            .parse::<usize>()
            .ok()
            .filter(|&n| n >= 1)
            .ok_or_else(|| syntax(c, format!("expected a positive strand count, found `{t}`")))?,
        None => return Err(syntax(raw.len(), "missing strand count".into())),
    };
    match toks.next() {
        Some((_, ":")) => {}
        Some((c, t)) => return Err(syntax(c, format!("expected `:`, found `{t}`"))),
        None => return Err(syntax(raw.len(), "missing `:`".into())),
    }
    let mut letters = Vec::new();
    for (c, t) in toks {
        let l: i64 = t
            .parse()
            .map_err(|_| syntax(c, format!("expected a generator, found `{t}`")))?;
        if l == 0 || l.unsigned_abs() as usize >= strands {
            return Err(DiagramError::GeneratorOutOfRange {
                letter: l,
                strands,
                line,
                column: c + 1,
            });
        }
        letters.push(l as i32);
    }
    Ok(BraidWord { strands, letters })
}

impl GaussBuilder {
    /// Appends braid letters to the open strand ends `ends[offset..]`.
    pub(crate) fn braid(&mut self, ends: &mut [Port], offset: usize, letters: &[i32]) {
        for &l in letters {
            let left = offset + l.unsigned_abs() as usize - 1;
            let right = left + 1;
            if l > 0 {
                let x = self.crossing(Sign::Positive);
                self.connect(ends[left], Port::Cross(x, Strand::Over));
                self.connect(ends[right], Port::Cross(x, Strand::Under));
                ends[right] = Port::Cross(x, Strand::Over);
                ends[left] = Port::Cross(x, Strand::Under);
            } else {
                let x = self.crossing(Sign::Negative);
                self.connect(ends[right], Port::Cross(x, Strand::Over));
                self.connect(ends[left], Port::Cross(x, Strand::Under));
                ends[left] = Port::Cross(x, Strand::Over);
                ends[right] = Port::Cross(x, Strand::Under);
            }
        }
    }
}
