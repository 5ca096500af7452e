//! Binary words: generalized Fibonacci words, morphisms, standard sequences
//! and characteristic words.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use serde::{Serialize, Serializer};

use crate::arith::{floor_surd, QuadraticSurd};
use crate::error::{domain, Error, Result};

/// A finite word over `{0, 1}`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryWord(Vec<u8>);

impl BinaryWord {
    pub fn new(symbols: Vec<u8>) -> Result<Self> {
        if let Some(pos) = symbols.iter().position(|&s| s > 1) {
            return Err(Error::InvalidSymbol {
                symbol: char::from_digit(symbols[pos] as u32, 36).unwrap_or('?'),
                position: pos,
                alphabet: "01",
            });
        }
        Ok(Self(symbols))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn symbols(&self) -> &[u8] {
        &self.0
    }

    pub fn into_symbols(self) -> Vec<u8> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Self(v)
    }

    pub fn repeat(&self, times: usize) -> Self {
        Self(self.0.repeat(times))
    }

    pub fn reversed(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }

    pub fn prefix(&self, len: usize) -> Self {
        Self(self.0[..len.min(self.len())].to_vec())
    }

    pub fn is_palindrome(&self) -> bool {
        is_palindrome(&self.0)
    }

    /// Whether `pattern` occurs as a factor.
    pub fn contains_factor(&self, pattern: &[u8]) -> bool {
        pattern.is_empty() || self.0.windows(pattern.len()).any(|w| w == pattern)
    }

    /// The word with its last two symbols exchanged.
    pub fn swap_last_two(&self) -> Result<Self> {
        let n = self.len();
        if n < 2 {
            return domain("swap_last_two needs a word of length >= 2");
        }
        let mut v = self.0.clone();
        v.swap(n - 2, n - 1);
        Ok(Self(v))
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.0 {
            f.write_str(if s == 0 { "0" } else { "1" })?;
        }
        Ok(())
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .enumerate()
            .map(|(position, c)| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                symbol => Err(Error::InvalidSymbol {
                    symbol,
                    position,
                    alphabet: "01",
                }),
            })
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }
}

impl Serialize for BinaryWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// True iff the sequence equals its reversal.
pub fn is_palindrome<T: PartialEq>(symbols: &[T]) -> bool {
    symbols.iter().eq(symbols.iter().rev())
}

/// Length of the longest common prefix of two sequences.
pub fn common_prefix_len<T: PartialEq>(a: &[T], b: &[T]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

fn check_family(i: u64) -> Result<()> {
    if i < 1 {
        return domain(format!("family parameter i must be >= 1, got {i}"));
    }
    Ok(())
}

/// The `(n, i)`-th Fibonacci number: `F_0 = 1`, `F_1 = i`,
/// `F_n = F_{n-1} + F_{n-2}`.
pub fn fib_number(n: u32, i: u64) -> Result<BigUint> {
    check_family(i)?;
    let (mut a, mut b) = (BigUint::from(1u32), BigUint::from(i));
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    Ok(a)
}

/// The first `count` values `F_0^[i], F_1^[i], ...`.
pub fn fib_numbers(count: usize, i: u64) -> Result<Vec<BigUint>> {
    check_family(i)?;
    let mut out = Vec::with_capacity(count);
    let (mut a, mut b) = (BigUint::from(1u32), BigUint::from(i));
    for _ in 0..count {
        out.push(a.clone());
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    Ok(out)
}

/// `F_n^[i]` evaluated from its Binet-type closed form in `Q(sqrt 5)`:
///
/// `F_n = ((psi^n)(sqrt5 + 1 - 2i) + (phi^n)(sqrt5 - 1 + 2i)) / (2 sqrt5)`.
///
/// Returns `None` if the exact evaluation is not an integer, which would
/// indicate an error in the formula.
pub fn fib_number_closed_form(n: u32, i: u64) -> Result<Option<BigInt>> {
    check_family(i)?;
    let i = i as i64;
    let phi = QuadraticSurd::from_ints(1, 1, 2, 5);
    let psi = QuadraticSurd::from_ints(1, -1, 2, 5);
    let c_psi = QuadraticSurd::from_ints(1 - 2 * i, 1, 1, 5);
    let c_phi = QuadraticSurd::from_ints(2 * i - 1, 1, 1, 5);
    let sum = psi.pow(n as u64).mul(&c_psi).add(&phi.pow(n as u64).mul(&c_phi));
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    Ok(sum.div_sqrt().scale(&half).to_integer())
}

/// The `(n, i)`-Fibonacci word: `f_0 = 0`, `f_1 = 0^{i-1}1`,
/// `f_n = f_{n-1} f_{n-2}`.
pub fn fib_word(n: u32, i: u64) -> Result<BinaryWord> {
    check_family(i)?;
    let f0 = vec![0u8];
    if n == 0 {
        return Ok(BinaryWord(f0));
    }
    let mut f1 = vec![0u8; (i - 1) as usize];
    f1.push(1);
    let (mut prev, mut cur) = (f0, f1);
    for _ in 1..n {
        let mut next = Vec::with_capacity(prev.len() + cur.len());
        next.extend_from_slice(&cur);
        next.extend_from_slice(&prev);
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(BinaryWord(cur))
}

/// Length-`len` prefix of the infinite `i`-Fibonacci word.
pub fn fib_word_prefix(i: u64, len: usize) -> Result<BinaryWord> {
    check_family(i)?;
    if len == 0 {
        return Ok(BinaryWord::empty());
    }
    // f_n is a prefix of f_{n+1} for n >= 1
    let mut prev = vec![0u8];
    let mut cur = vec![0u8; (i - 1) as usize];
    cur.push(1);
    while cur.len() < len {
        let mut next = Vec::with_capacity(prev.len() + cur.len());
        next.extend_from_slice(&cur);
        next.extend_from_slice(&prev);
        prev = std::mem::replace(&mut cur, next);
    }
    cur.truncate(len);
    Ok(BinaryWord(cur))
}

/// The classic finite Fibonacci words `f_0 = 1`, `f_1 = 0`,
/// `f_n = f_{n-1} f_{n-2}`.
pub fn classic_fib_word(n: u32) -> BinaryWord {
    let (mut prev, mut cur) = (vec![1u8], vec![0u8]);
    if n == 0 {
        return BinaryWord(prev);
    }
    for _ in 1..n {
        let mut next = cur.clone();
        next.extend_from_slice(&prev);
        prev = std::mem::replace(&mut cur, next);
    }
    BinaryWord(cur)
}

/// A morphism of `{0,1}*` given by the images of both letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    pub image_of_0: BinaryWord,
    pub image_of_1: BinaryWord,
}

impl Morphism {
    pub fn new(image_of_0: BinaryWord, image_of_1: BinaryWord) -> Self {
        Self {
            image_of_0,
            image_of_1,
        }
    }

    /// `0 -> 01`, `1 -> 0`.
    pub fn fibonacci() -> Self {
        Self::new(BinaryWord(vec![0, 1]), BinaryWord(vec![0]))
    }

    /// `0 -> 0`, `1 -> 0^i 1`; maps the Fibonacci word onto `f^[i+2]`.
    pub fn phi(i: usize) -> Self {
        let mut one = vec![0u8; i];
        one.push(1);
        Self::new(BinaryWord(vec![0]), BinaryWord(one))
    }

    pub fn apply(&self, w: &BinaryWord) -> BinaryWord {
        let mut out = Vec::new();
        for &s in w.symbols() {
            let img = if s == 0 {
                &self.image_of_0
            } else {
                &self.image_of_1
            };
            out.extend_from_slice(img.symbols());
        }
        BinaryWord(out)
    }
}

/// Removes the last two symbols.
pub fn phi_drop2(w: &BinaryWord) -> Result<BinaryWord> {
    if w.len() < 2 {
        return domain(format!(
            "deleting two symbols needs |w| >= 2, got {}",
            w.len()
        ));
    }
    Ok(BinaryWord(w.0[..w.len() - 2].to_vec()))
}

/// Number of distinct factors of length `n`.
pub fn subword_complexity(w: &BinaryWord, n: usize) -> Result<usize> {
    if n > w.len() {
        return domain(format!("factor length {n} exceeds word length {}", w.len()));
    }
    if n == 0 {
        return Ok(1);
    }
    let set: HashSet<&[u8]> = w.0.windows(n).collect();
    Ok(set.len())
}

/// Factor complexity `P(f^[i], n)` of the infinite word, measured on
/// prefixes whose length doubles until the count stops changing.
pub fn stable_complexity(i: u64, n: usize) -> Result<usize> {
    let mut len = (4 * n).max(64);
    let mut last = subword_complexity(&fib_word_prefix(i, len)?, n)?;
    loop {
        len *= 2;
        let count = subword_complexity(&fib_word_prefix(i, len)?, n)?;
        if count == last {
            return Ok(count);
        }
        last = count;
    }
}

/// Characteristic word of slope `(i - phi)/(i^2 - i - 1)`:
/// `w(k) = floor((k+1) alpha) - floor(k alpha)` for `k = 1..=len`, with every
/// floor evaluated exactly.
pub fn characteristic_word(i: u64, len: usize) -> Result<BinaryWord> {
    check_family(i)?;
    let i = i as i128;
    // k·alpha = (k(2i-1) - k·sqrt5) / (2(i^2 - i - 1))
    let den = 2 * (i * i - i - 1);
    let floor_at = |k: i128| floor_surd(k * (2 * i - 1), -k, 5, den);
    let mut out = Vec::with_capacity(len);
    let mut prev = floor_at(1);
    for k in 1..=len as i128 {
        let next = floor_at(k + 1);
        let bit = next - prev;
        debug_assert!(bit == 0 || bit == 1);
        out.push(bit as u8);
        prev = next;
    }
    Ok(BinaryWord(out))
}

/// Directive sequence `(d_1, d_2, ...)`: a finite prefix followed by a
/// periodic tail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectiveSequence {
    prefix: Vec<u64>,
    period: Vec<u64>,
}

impl DirectiveSequence {
    pub fn new(prefix: Vec<u64>, period: Vec<u64>) -> Result<Self> {
        if period.is_empty() {
            return domain("directive sequence needs a non-empty periodic tail");
        }
        if period.contains(&0) || prefix.iter().skip(1).any(|&d| d == 0) {
            return domain("directive terms d_n must be positive for n > 1");
        }
        Ok(Self { prefix, period })
    }

    /// Directive of `[0, i, 1, 1, ...]`, i.e. `(i-1, 1, 1, ...)`.
    pub fn i_fibonacci(i: u64) -> Result<Self> {
        check_family(i)?;
        Self::new(vec![i - 1], vec![1])
    }

    /// Directive of `[0, a, b, a, b, ...]`, i.e. `(a-1, b, a, b, ...)`.
    pub fn alternating(a: u64, b: u64) -> Result<Self> {
        if a < 1 || b < 1 {
            return domain("a and b must be positive");
        }
        Self::new(vec![a - 1], vec![b, a])
    }

    /// The term `d_n`, `n >= 1`.
    pub fn term(&self, n: usize) -> u64 {
        assert!(n >= 1, "directive terms are 1-indexed");
        let k = n - 1;
        if k < self.prefix.len() {
            self.prefix[k]
        } else {
            self.period[(k - self.prefix.len()) % self.period.len()]
        }
    }
}

/// Standard sequence `s_{-1} = 1`, `s_0 = 0`, `s_n = s_{n-1}^{d_n} s_{n-2}`.
pub fn standard_sequence(d: &DirectiveSequence, n: i64) -> Result<BinaryWord> {
    if n < -1 {
        return domain(format!("standard sequence index must be >= -1, got {n}"));
    }
    let (mut prev, mut cur) = (vec![1u8], vec![0u8]);
    if n == -1 {
        return Ok(BinaryWord(prev));
    }
    for k in 1..=n as usize {
        let mut next = cur.repeat(d.term(k) as usize);
        next.extend_from_slice(&prev);
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(BinaryWord(cur))
}

fn check_ab(a: u64, b: u64) -> Result<()> {
    if a < 1 || b < 1 {
        return domain(format!("a and b must be >= 1, got a={a}, b={b}"));
    }
    Ok(())
}

/// Words `s_0 = 1`, `s_1 = 0`, `s_2 = 0^{a-1}1`, and for `n >= 3`
/// `s_n = s_{n-1}^a s_{n-2}` (n even) or `s_{n-1}^b s_{n-2}` (n odd).
pub fn ab_fib_word(a: u64, b: u64, n: u32) -> Result<BinaryWord> {
    check_ab(a, b)?;
    match n {
        0 => return Ok(BinaryWord(vec![1])),
        1 => return Ok(BinaryWord(vec![0])),
        _ => {}
    }
    let mut prev = vec![0u8];
    let mut cur = vec![0u8; (a - 1) as usize];
    cur.push(1);
    for k in 3..=n {
        let exp = if k % 2 == 0 { a } else { b };
        let mut next = cur.repeat(exp as usize);
        next.extend_from_slice(&prev);
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(BinaryWord(cur))
}

/// `F_0 = 0`, `F_1 = 1`, `F_n = a F_{n-1} + F_{n-2}` (n even),
/// `b F_{n-1} + F_{n-2}` (n odd).
pub fn ab_fib_number(a: u64, b: u64, n: u32) -> Result<BigUint> {
    check_ab(a, b)?;
    let (mut prev, mut cur) = (BigUint::from(0u32), BigUint::from(1u32));
    if n == 0 {
        return Ok(prev);
    }
    for k in 2..=n {
        let mult = if k % 2 == 0 { a } else { b };
        let next = &cur * mult + &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur)
}
