use std::cmp::Ordering;
use std::fmt;

/// A generator of a free *-algebra: `name_{row,col}` inside free-product factor `factor`.
///
/// Field order is the total order on generators: factor, name, (row, col).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GeneratorId {
    pub factor: u16,
    pub name: char,
    pub row: u16,
    pub col: u16,
}

impl GeneratorId {
    pub const fn new(factor: u16, name: char, row: u16, col: u16) -> Self {
        GeneratorId { factor, name, row, col }
    }

    /// `u_{row,col}` in factor 0. Indices are 1-based.
    pub const fn u(row: u16, col: u16) -> Self {
        GeneratorId::new(0, 'u', row, col)
    }

    pub fn in_factor(self, factor: u16) -> Self {
        GeneratorId { factor, ..self }
    }

    pub fn plain(self) -> Letter {
        Letter { gen: self, star: false }
    }

    pub fn star(self) -> Letter {
        Letter { gen: self, star: true }
    }
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factor > 0 {
            write!(f, "f{}.", self.factor)?;
        }
        if self.row < 10 && self.col < 10 {
            write!(f, "{}{}{}", self.name, self.row, self.col)
        } else {
            write!(f, "{}{},{}", self.name, self.row, self.col)
        }
    }
}

/// A generator or its adjoint. Plain letters sort before starred ones.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter {
    pub gen: GeneratorId,
    pub star: bool,
}

impl Letter {
    pub fn adjoint(self) -> Letter {
        Letter {
            gen: self.gen,
            star: !self.star,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.gen, if self.star { "*" } else { "" })
    }
}

/// A monomial of the free *-algebra. The empty word is the unit.
///
/// Words are ordered by length first, then letterwise.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn unit() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letter(l: Letter) -> Self {
        Word(vec![l])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Reverses the word and toggles every star.
    pub fn adjoint(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.adjoint()).collect())
    }

    /// All cyclic rotations, starting with the word itself.
    pub fn rotations(&self) -> impl Iterator<Item = Word> + '_ {
        let n = self.0.len().max(1);
        (0..n).map(move |i| {
            let mut v = Vec::with_capacity(self.0.len());
            v.extend_from_slice(&self.0[i.min(self.0.len())..]);
            v.extend_from_slice(&self.0[..i.min(self.0.len())]);
            Word(v)
        })
    }

    pub fn generators(&self) -> impl Iterator<Item = GeneratorId> + '_ {
        self.0.iter().map(|l| l.gen)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Every word of exactly `len` letters over `alphabet`, in word order when
/// `alphabet` is sorted.
pub fn words_of_length(alphabet: &[Letter], len: usize) -> Vec<Word> {
    let mut out = vec![Word::unit()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(out.len() * alphabet.len());
        for w in &out {
            for &l in alphabet {
                let mut v = w.0.clone();
                v.push(l);
                next.push(Word(v));
            }
        }
        out = next;
    }
    out
}
