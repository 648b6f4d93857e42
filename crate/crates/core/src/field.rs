//! Finite fields GF(p^k) with elements encoded as integers `0..q`.
//!
//! An element is a polynomial of degree `< k` over GF(p); its code is
//! `Σ c_i p^i` with coefficients listed low-degree-first. Multiplication goes
//! through discrete log tables built from a primitive element.

use thiserror::Error;

/// Default ceiling on the field size.
pub const DEFAULT_FIELD_LIMIT: usize = 1 << 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("NotPrime: {0} is not a prime")]
    NotPrime(u64),
    #[error("NotPrimePower: {0} is not a prime power")]
    NotPrimePower(u64),
    #[error("TooLarge: field of size {size} exceeds the limit {limit}")]
    TooLarge { size: u64, limit: usize },
    #[error("BadDegree: extension degree must be at least 1")]
    BadDegree,
}

pub type Element = u32;

#[derive(Debug, Clone)]
pub struct FieldSpec {
    p: u32,
    k: u32,
    q: usize,
    modulus: Vec<u32>,
    exp: Vec<Element>,
    log: Vec<u32>,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q = p^k` into `(p, k)`.
pub fn prime_power(q: u64) -> Result<(u32, u32), FieldError> {
    if q < 2 {
        return Err(FieldError::NotPrimePower(q));
    }
    let p = (2..=q)
        .find(|d| q.is_multiple_of(*d))
        .expect("q >= 2 has a prime factor");
    let (mut rest, mut k) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    if rest != 1 {
        return Err(FieldError::NotPrimePower(q));
    }
    Ok((p as u32, k))
}

pub fn make_field(p: u64, k: u32) -> Result<FieldSpec, FieldError> {
    make_field_with_limit(p, k, DEFAULT_FIELD_LIMIT)
}

pub fn make_field_of_size(q: u64) -> Result<FieldSpec, FieldError> {
    let (p, k) = prime_power(q)?;
    make_field(p as u64, k)
}

pub fn make_field_with_limit(p: u64, k: u32, limit: usize) -> Result<FieldSpec, FieldError> {
    if !is_prime(p) {
        return Err(FieldError::NotPrime(p));
    }
    if k == 0 {
        return Err(FieldError::BadDegree);
    }
    let size = p
        .checked_pow(k)
        .filter(|&s| s <= limit as u64)
        .ok_or(FieldError::TooLarge {
            size: p.saturating_pow(k),
            limit,
        })?;
    let p = p as u32;
    let modulus = smallest_irreducible(p, k as usize);
    let mut field = FieldSpec {
        p,
        k,
        q: size as usize,
        modulus,
        exp: Vec::new(),
        log: Vec::new(),
    };
    field.build_log_tables();
    Ok(field)
}

/// Lexicographically smallest monic irreducible of degree `k` over GF(p),
/// coefficients compared low-degree-first.
fn smallest_irreducible(p: u32, k: usize) -> Vec<u32> {
    let count = (p as u64).pow(k as u32);
    (0..count)
        .map(|code| {
            // Most significant digit is c_0, so codes enumerate in lexicographic order.
            let mut coeffs = vec![0; k + 1];
            let mut rest = code;
            for c in coeffs[..k].iter_mut().rev() {
                *c = (rest % p as u64) as u32;
                rest /= p as u64;
            }
            coeffs[k] = 1;
            coeffs
        })
        .find(|poly| is_irreducible(poly, p))
        .expect("an irreducible polynomial exists in every degree")
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let deg = poly.len() - 1;
    for d in 1..=deg / 2 {
        for code in 0..(p as u64).pow(d as u32) {
            let mut divisor = vec![0; d + 1];
            let mut rest = code;
            for c in divisor[..d].iter_mut() {
                *c = (rest % p as u64) as u32;
                rest /= p as u64;
            }
            divisor[d] = 1;
            if poly_rem_monic(poly, &divisor, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn poly_rem_monic(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    for top in (dm..r.len()).rev() {
        let c = r[top];
        if c == 0 {
            continue;
        }
        for (i, &mi) in m.iter().enumerate() {
            let idx = top - dm + i;
            r[idx] = (r[idx] + p - (c * mi) % p) % p;
        }
    }
    r.truncate(dm);
    r
}

impl FieldSpec {
    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn size(&self) -> usize {
        self.q
    }

    /// Modulus coefficients, low-degree-first, monic.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> {
        0..self.q as Element
    }

    pub fn zero(&self) -> Element {
        0
    }

    pub fn one(&self) -> Element {
        1
    }

    pub fn coefficients(&self, a: Element) -> Vec<u32> {
        let mut rest = a;
        (0..self.k)
            .map(|_| {
                let c = rest % self.p;
                rest /= self.p;
                c
            })
            .collect()
    }

    fn encode(&self, coeffs: &[u32]) -> Element {
        coeffs.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    pub fn add(&self, a: Element, b: Element) -> Element {
        if self.k == 1 {
            return (a + b) % self.p;
        }
        let (mut a, mut b) = (a, b);
        let (mut out, mut place) = (0, 1);
        for _ in 0..self.k {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn neg(&self, a: Element) -> Element {
        let coeffs: Vec<u32> = self
            .coefficients(a)
            .iter()
            .map(|&c| (self.p - c) % self.p)
            .collect();
        self.encode(&coeffs)
    }

    pub fn sub(&self, a: Element, b: Element) -> Element {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Element, b: Element) -> Element {
        if a == 0 || b == 0 {
            return 0;
        }
        let order = self.q as u32 - 1;
        self.exp[((self.log[a as usize] + self.log[b as usize]) % order) as usize]
    }

    pub fn inv(&self, a: Element) -> Option<Element> {
        if a == 0 {
            return None;
        }
        let order = self.q as u32 - 1;
        Some(self.exp[((order - self.log[a as usize]) % order) as usize])
    }

    pub fn pow(&self, a: Element, e: u64) -> Element {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let order = (self.q - 1) as u64;
        self.exp[((self.log[a as usize] as u64 * (e % order)) % order) as usize]
    }

    /// Quadratic character: 0 at 0, otherwise ±1. Every nonzero element is a
    /// square in characteristic 2.
    pub fn quadratic_character(&self, a: Element) -> i8 {
        if a == 0 {
            0
        } else if self.p == 2 || self.log[a as usize].is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn dot(&self, x: &[Element], y: &[Element]) -> Element {
        x.iter()
            .zip(y)
            .fold(0, |acc, (&a, &b)| self.add(acc, self.mul(a, b)))
    }

    fn mul_by_reduction(&self, a: Element, b: Element) -> Element {
        let (ca, cb) = (self.coefficients(a), self.coefficients(b));
        let mut prod = vec![0u32; 2 * self.k as usize - 1];
        for (i, &x) in ca.iter().enumerate() {
            for (j, &y) in cb.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        self.encode(&poly_rem_monic(&prod, &self.modulus, self.p))
    }

    fn build_log_tables(&mut self) {
        let order = self.q - 1;
        let generator = (1..self.q as Element)
            .find(|&g| {
                let (mut x, mut n) = (g, 1);
                while x != 1 {
                    x = self.mul_by_reduction(x, g);
                    n += 1;
                }
                n == order
            })
            .expect("the multiplicative group is cyclic");
        let mut exp = Vec::with_capacity(order);
        let mut log = vec![0; self.q];
        let mut x = 1;
        for e in 0..order {
            exp.push(x);
            log[x as usize] = e as u32;
            x = self.mul_by_reduction(x, generator);
        }
        self.exp = exp;
        self.log = log;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_fields() {
        let f = make_field(2, 1).unwrap();
        assert_eq!(f.modulus(), &[0, 1]);
        assert_eq!(f.size(), 2);
        let f5 = make_field(5, 1).unwrap();
        assert_eq!(f5.mul(3, 4), 2);
        assert_eq!(f5.inv(2), Some(3));
        assert_eq!(f5.neg(1), 4);
    }

    #[test]
    fn gf4_modulus() {
        let f = make_field(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        // x * x = x + 1
        assert_eq!(f.mul(2, 2), 3);
        assert_eq!(f.add(2, 3), 1);
    }

    #[test]
    fn smallest_moduli() {
        // x^2 + 1 is irreducible over GF(3) and precedes x^2 + x + 2 lexicographically.
        assert_eq!(make_field(3, 2).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(make_field(2, 3).unwrap().modulus(), &[1, 0, 1, 1]);
    }

    #[test]
    fn errors() {
        assert_eq!(make_field(4, 1).unwrap_err(), FieldError::NotPrime(4));
        assert!(matches!(
            make_field(2, 17),
            Err(FieldError::TooLarge { .. })
        ));
        assert!(matches!(
            make_field_with_limit(3, 3, 20),
            Err(FieldError::TooLarge { .. })
        ));
        assert_eq!(prime_power(12), Err(FieldError::NotPrimePower(12)));
        assert_eq!(prime_power(9), Ok((3, 2)));
    }

    #[test]
    fn quadratic_character_counts() {
        for q in [3u64, 5, 7, 9, 25] {
            let f = make_field_of_size(q).unwrap();
            let squares = f
                .elements()
                .filter(|&a| f.quadratic_character(a) == 1)
                .count();
            assert_eq!(squares as u64, (q - 1) / 2);
            let minus_one = f.neg(1);
            let expected = if q % 4 == 1 { 1 } else { -1 };
            assert_eq!(f.quadratic_character(minus_one), expected, "q = {q}");
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
            let f = make_field_of_size(q).unwrap();
            let els: Vec<_> = f.elements().collect();
            for &a in &els {
                assert_eq!(f.add(a, f.neg(a)), 0);
                assert_eq!(f.mul(a, 1), a);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for &b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.mul(a, b), f.mul_by_reduction(a, b));
                    for &c in &els {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }
}
