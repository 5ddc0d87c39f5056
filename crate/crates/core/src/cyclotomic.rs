//! Exact arithmetic in cyclotomic fields `Q(zeta_M)`.
//!
//! Elements are polynomials in `zeta_M` reduced modulo the `M`-th cyclotomic
//! polynomial, with rational coefficients. Levels are merged via lcm on
//! binary operations, and [`Cyclotomic::canonicalize`] descends an element to
//! its minimal level (the conductor), so canonical forms are unique. This is
//! the value domain of every character and function value in the crate; no
//! floating point is used anywhere.

use crate::linalg;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

/// Exact rational scalar used throughout the crate.
pub type Rat = BigRational;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum CycError {
    #[error("division by zero in Q(zeta)")]
    DivisionByZero,
}

/// Convenience constructor for small rationals.
pub fn rat(n: i64) -> Rat {
    Rat::from_i64(n).expect("i64 always embeds")
}

/// Convenience constructor for a reduced fraction `n/d`.
pub fn ratio(n: i64, d: i64) -> Rat {
    assert!(d != 0, "zero denominator");
    Rat::new(BigInt::from(n), BigInt::from(d))
}

// ---------------------------------------------------------------------------
// per-level data: Euler phi and the cyclotomic polynomial
// ---------------------------------------------------------------------------

struct LevelData {
    phi: usize,
    /// Nonzero coefficients of the monic minimal polynomial, as (exponent,
    /// coefficient) pairs; the last entry is (phi, 1).
    sparse: Vec<(usize, BigInt)>,
}

fn prime_factors(mut m: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            out.push(p);
            while m % p == 0 {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

fn euler_phi(m: u32) -> usize {
    let mut phi = m as u64;
    for p in prime_factors(m) {
        phi = phi / p as u64 * (p as u64 - 1);
    }
    phi as usize
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::from(0); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

/// Exact division of integer polynomials; the divisor must be monic and the
/// division must be exact, which holds for the quotients of products of
/// `x^d - 1` used below.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = num.to_vec();
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    let nd = rem.len() - 1;
    assert!(nd >= dd);
    let mut quot = vec![BigInt::from(0); nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        quot[k] = c.clone();
        for (j, dj) in den.iter().enumerate() {
            if !dj.is_zero() {
                rem[k + j] -= &c * dj;
            }
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "division not exact");
    quot
}

fn x_pow_minus_one(d: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::from(0); d + 1];
    v[0] = BigInt::from(-1);
    v[d] = BigInt::from(1);
    v
}

/// Coefficients of the `m`-th cyclotomic polynomial, dense, monic.
fn cyclotomic_poly(m: u32) -> Vec<BigInt> {
    if m == 1 {
        return vec![BigInt::from(-1), BigInt::from(1)];
    }
    let primes = prime_factors(m);
    let rad: u32 = primes.iter().product();
    // Moebius product over divisors of the squarefree radical
    let mut num: Vec<BigInt> = vec![BigInt::from(1)];
    let mut den: Vec<BigInt> = vec![BigInt::from(1)];
    let k = primes.len();
    for mask in 0u32..(1 << k) {
        let mut d = rad;
        let mut bits = 0;
        for (i, &p) in primes.iter().enumerate() {
            if mask & (1 << i) != 0 {
                d /= p;
                bits += 1;
            }
        }
        // mu(rad/d) = (-1)^bits
        let factor = x_pow_minus_one(d as usize);
        if bits % 2 == 0 {
            num = poly_mul(&num, &factor);
        } else {
            den = poly_mul(&den, &factor);
        }
    }
    let phi_rad = poly_div_exact(&num, &den);
    // substitute x -> x^(m/rad)
    let stretch = (m / rad) as usize;
    if stretch == 1 {
        return phi_rad;
    }
    let mut out = vec![BigInt::from(0); (phi_rad.len() - 1) * stretch + 1];
    for (i, c) in phi_rad.iter().enumerate() {
        out[i * stretch] = c.clone();
    }
    out
}

fn level_data(m: u32) -> Arc<LevelData> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<LevelData>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("level cache poisoned");
    guard
        .entry(m)
        .or_insert_with(|| {
            let poly = cyclotomic_poly(m);
            let phi = poly.len() - 1;
            debug_assert_eq!(phi, euler_phi(m));
            let sparse: Vec<(usize, BigInt)> = poly
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i, c.clone()))
                .collect();
            Arc::new(LevelData { phi, sparse })
        })
        .clone()
}

fn lcm_u32(a: u32, b: u32) -> u32 {
    let g = num_integer::gcd(a as u64, b as u64);
    let l = a as u64 / g * b as u64;
    assert!(l <= 1 << 22, "cyclotomic level {l} out of supported range");
    l as u32
}

// ---------------------------------------------------------------------------
// the field element
// ---------------------------------------------------------------------------

/// An exact element of `Q(zeta_M)`, stored reduced modulo the `M`-th
/// cyclotomic polynomial. Rational numbers embed with level 1.
#[derive(Clone)]
pub struct Cyclotomic {
    level: u32,
    /// Length `phi(level)`; coefficient of `zeta^j` at index `j`.
    coeffs: Vec<Rat>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic {
            level: 1,
            coeffs: vec![Rat::zero()],
        }
    }

    pub fn one() -> Self {
        Cyclotomic::from_rat(Rat::one())
    }

    pub fn from_rat(r: Rat) -> Self {
        Cyclotomic {
            level: 1,
            coeffs: vec![r],
        }
    }

    pub fn from_int(n: i64) -> Self {
        Cyclotomic::from_rat(rat(n))
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    /// `e^{2 pi i r}` as an exact cyclotomic number; `r` is read modulo 1 and
    /// the denominator of the reduced fraction determines the level.
    pub fn root_of_unity(r: &Rat) -> Self {
        let frac = r - r.floor();
        let den = frac.denom().to_u32().expect("root-of-unity order too large");
        let num = frac.numer().to_u32().expect("reduced numerator fits");
        Cyclotomic::monomial(den, num as usize)
    }

    /// `c * zeta_level^exp`, reduced. `exp` may be any value below `level`.
    fn monomial(level: u32, exp: usize) -> Self {
        let data = level_data(level);
        let exp = exp % level as usize;
        let mut coeffs = vec![Rat::zero(); exp.max(data.phi - 1) + 1];
        coeffs[exp] = Rat::one();
        reduce_in_place(&mut coeffs, &data);
        Cyclotomic { level, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// The element as a rational number, if it is one.
    pub fn to_rat(&self) -> Option<Rat> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn promote(&self, level: u32) -> Self {
        if self.level == level {
            return self.clone();
        }
        assert!(level % self.level == 0, "promotion only to multiples");
        let data = level_data(level);
        let stretch = (level / self.level) as usize;
        let mut coeffs = vec![Rat::zero(); data.phi];
        let mut scratch: Vec<Rat> = Vec::new();
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = j * stretch;
            scratch.clear();
            scratch.resize(e.max(data.phi - 1) + 1, Rat::zero());
            scratch[e] = Rat::one();
            reduce_in_place(&mut scratch, &data);
            for (k, s) in scratch.iter().enumerate().take(data.phi) {
                if !s.is_zero() {
                    coeffs[k] += c * s;
                }
            }
        }
        Cyclotomic { level, coeffs }
    }

    fn binop(&self, other: &Self, f: impl Fn(&Rat, &Rat) -> Rat) -> Self {
        let level = lcm_u32(self.level, other.level);
        let a = self.promote(level);
        let b = other.promote(level);
        let coeffs = a
            .coeffs
            .iter()
            .zip(b.coeffs.iter())
            .map(|(x, y)| {
                if x.is_zero() && y.is_zero() {
                    Rat::zero()
                } else {
                    f(x, y)
                }
            })
            .collect();
        Cyclotomic { level, coeffs }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        self.binop(other, |x, y| x + y)
    }

    pub fn sub(&self, other: &Self) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        self.binop(other, |x, y| x - y)
    }

    pub fn neg(&self) -> Self {
        Cyclotomic {
            level: self.level,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Cyclotomic::zero();
        }
        // rational factors act coefficientwise
        if self.level == 1 {
            return other.scale(&self.coeffs[0]);
        }
        if other.level == 1 {
            return self.scale(&other.coeffs[0]);
        }
        let level = lcm_u32(self.level, other.level);
        let a = self.promote(level);
        let b = other.promote(level);
        let data = level_data(level);
        let mut prod = vec![Rat::zero(); 2 * data.phi.max(1)];
        for (i, ai) in a.coeffs.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.coeffs.iter().enumerate() {
                if !bj.is_zero() {
                    prod[i + j] += ai * bj;
                }
            }
        }
        reduce_in_place(&mut prod, &data);
        Cyclotomic {
            level,
            coeffs: prod,
        }
    }

    pub fn scale(&self, r: &Rat) -> Self {
        if r.is_zero() {
            return Cyclotomic::zero();
        }
        Cyclotomic {
            level: self.level,
            coeffs: self
                .coeffs
                .iter()
                .map(|c| if c.is_zero() { Rat::zero() } else { c * r })
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Cyclotomic::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Multiplicative inverse, or an error for zero.
    pub fn checked_inv(&self) -> Result<Self, CycError> {
        if self.is_zero() {
            return Err(CycError::DivisionByZero);
        }
        if let Some(r) = self.to_rat() {
            return Ok(Cyclotomic::from_rat(Rat::one() / r));
        }
        let data = level_data(self.level);
        let modulus: Vec<Rat> = {
            let mut dense = vec![Rat::zero(); data.phi + 1];
            for (k, c) in &data.sparse {
                dense[*k] = Rat::from_integer(c.clone());
            }
            dense
        };
        let inv = poly_mod_inverse(&self.coeffs, &modulus)
            .expect("element of a field has an inverse");
        let mut coeffs = inv;
        coeffs.resize(data.phi, Rat::zero());
        Ok(Cyclotomic {
            level: self.level,
            coeffs,
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self, CycError> {
        let level = lcm_u32(self.level, other.level);
        let inv = other.promote(level).checked_inv()?;
        Ok(self.mul(&inv))
    }

    /// Complex conjugation, the ring involution `zeta -> zeta^-1`.
    pub fn conjugate(&self) -> Self {
        let m = self.level as usize;
        let data = level_data(self.level);
        let mut acc = vec![Rat::zero(); m.max(data.phi)];
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = (m - j) % m;
            acc[e] += c;
        }
        reduce_in_place(&mut acc, &data);
        Cyclotomic {
            level: self.level,
            coeffs: acc,
        }
    }

    /// `z * conjugate(z)`, the exact squared modulus.
    pub fn norm_sq(&self) -> Self {
        self.mul(&self.conjugate())
    }

    /// Minimal-level canonical form. Two field elements are equal iff their
    /// canonical forms are structurally identical.
    pub fn canonicalize(&self) -> Self {
        if self.is_zero() {
            return Cyclotomic::zero();
        }
        let mut cur = self.clone();
        'descend: loop {
            if cur.level == 1 {
                break;
            }
            for p in prime_factors(cur.level) {
                let d = cur.level / p;
                if let Some(next) = cur.try_descend(d) {
                    cur = next;
                    continue 'descend;
                }
            }
            break;
        }
        cur
    }

    fn try_descend(&self, d: u32) -> Option<Cyclotomic> {
        let target = level_data(d);
        let here = level_data(self.level);
        let stretch = (self.level / d) as usize;
        // columns: level-`self.level` representation of zeta_d^j
        let mut cols: Vec<Vec<Rat>> = Vec::with_capacity(target.phi);
        for j in 0..target.phi {
            cols.push(Cyclotomic::monomial(self.level, j * stretch).coeffs);
        }
        let rows: Vec<Vec<Rat>> = (0..here.phi)
            .map(|r| cols.iter().map(|c| c[r].clone()).collect())
            .collect();
        let sol = linalg::solve(&rows, &self.coeffs)?;
        Some(Cyclotomic {
            level: d,
            coeffs: sol,
        })
    }

    /// Iterate the nonzero coefficients of the canonical form.
    pub fn canonical_coeffs(&self) -> Vec<(usize, Rat)> {
        let c = self.canonicalize();
        c.coeffs
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(j, v)| (j, v.clone()))
            .collect()
    }
}

fn reduce_in_place(coeffs: &mut Vec<Rat>, data: &LevelData) {
    let phi = data.phi;
    let mut deg = coeffs.len();
    while deg > phi {
        deg -= 1;
        if coeffs[deg].is_zero() {
            continue;
        }
        let c = std::mem::replace(&mut coeffs[deg], Rat::zero());
        let base = deg - phi;
        for (k, pk) in &data.sparse {
            if *k == phi {
                continue; // leading term cancels the monomial itself
            }
            coeffs[base + k] -= &c * pk;
        }
    }
    coeffs.truncate(phi);
    coeffs.resize(phi, Rat::zero());
}

/// Extended Euclid in `Q[x]`: an inverse of `a` modulo the monic `modulus`.
fn poly_mod_inverse(a: &[Rat], modulus: &[Rat]) -> Option<Vec<Rat>> {
    fn deg(p: &[Rat]) -> Option<usize> {
        p.iter().rposition(|c| !c.is_zero())
    }
    fn rem_div(num: &[Rat], den: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
        let dd = deg(den).expect("division by zero polynomial");
        let lead = den[dd].clone();
        let mut rem: Vec<Rat> = num.to_vec();
        let mut quot = vec![Rat::zero(); num.len().saturating_sub(dd) + 1];
        while let Some(nd) = deg(&rem) {
            if nd < dd {
                break;
            }
            let f = &rem[nd] / &lead;
            quot[nd - dd] = f.clone();
            for (j, dj) in den.iter().enumerate().take(dd + 1) {
                if !dj.is_zero() {
                    let delta = &f * dj;
                    rem[nd - dd + j] -= delta;
                }
            }
        }
        (quot, rem)
    }
    // invariant: r0 = s0 * a (mod modulus), r1 = s1 * a (mod modulus)
    let mut r0: Vec<Rat> = modulus.to_vec();
    let mut r1: Vec<Rat> = a.to_vec();
    let mut s0: Vec<Rat> = vec![Rat::zero()];
    let mut s1: Vec<Rat> = vec![Rat::one()];
    while let Some(d1) = deg(&r1) {
        if d1 == 0 {
            let inv_c = Rat::one() / &r1[0];
            return Some(s1.iter().map(|c| c * &inv_c).collect());
        }
        let (q, rem) = rem_div(&r0, &r1);
        let mut s_next = s0.clone();
        let prod = {
            let mut out = vec![Rat::zero(); q.len() + s1.len()];
            for (i, qi) in q.iter().enumerate() {
                if qi.is_zero() {
                    continue;
                }
                for (j, sj) in s1.iter().enumerate() {
                    if !sj.is_zero() {
                        out[i + j] -= qi * sj;
                    }
                }
            }
            out
        };
        if s_next.len() < prod.len() {
            s_next.resize(prod.len(), Rat::zero());
        }
        for (k, pk) in prod.iter().enumerate() {
            if !pk.is_zero() {
                s_next[k] += pk;
            }
        }
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s_next;
    }
    None
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.sub(other).is_zero()
    }
}

impl Eq for Cyclotomic {}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.canonicalize();
        if c.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, coeff) in c.coeffs.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            let mag = coeff.abs();
            if first {
                if coeff.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if coeff.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_mag = mag.is_one();
            if j == 0 {
                write!(f, "{mag}")?;
            } else {
                if !unit_mag {
                    write!(f, "{mag}*")?;
                }
                if j == 1 {
                    write!(f, "z{}", c.level)?;
                } else {
                    write!(f, "z{}^{}", c.level, j)?;
                }
            }
        }
        Ok(())
    }
}

impl linalg::FieldElem for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::zero()
    }
    fn one() -> Self {
        Cyclotomic::one()
    }
    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        Cyclotomic::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        Cyclotomic::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        Cyclotomic::mul(self, other)
    }
    fn inv(&self) -> Self {
        self.checked_inv().expect("nonzero pivot")
    }
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let c = self.canonicalize();
        let mut coeffs = BTreeMap::new();
        for (j, v) in c.coeffs.iter().enumerate() {
            if !v.is_zero() {
                coeffs.insert(j.to_string(), v.to_string());
            }
        }
        #[derive(Serialize)]
        struct Repr {
            level: u32,
            coeffs: BTreeMap<String, String>,
        }
        Repr {
            level: c.level,
            coeffs,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            level: u32,
            coeffs: BTreeMap<String, String>,
        }
        let repr = Repr::deserialize(deserializer)?;
        if repr.level == 0 {
            return Err(D::Error::custom("level must be positive"));
        }
        let mut acc = Cyclotomic::zero();
        for (j, v) in &repr.coeffs {
            let exp: usize = j.parse().map_err(D::Error::custom)?;
            let coeff: Rat = v.parse().map_err(D::Error::custom)?;
            let term = Cyclotomic::monomial(repr.level, exp).scale(&coeff);
            acc = acc.add(&term);
        }
        Ok(acc)
    }
}

// ---------------------------------------------------------------------------
// matrices over the cyclotomic field
// ---------------------------------------------------------------------------

/// Dense rectangular matrix with cyclotomic entries; used for truncated
/// operator matrices in the minimal-type suite.
#[derive(Clone, Debug, PartialEq)]
pub struct CycMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Cyclotomic>,
}

impl CycMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Cyclotomic>) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        CycMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        CycMatrix::new(rows, cols, vec![Cyclotomic::zero(); rows * cols])
    }

    pub fn identity(n: usize) -> Self {
        let mut m = CycMatrix::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Cyclotomic::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Cyclotomic {
        &self.entries[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Cyclotomic {
        &mut self.entries[r * self.cols + c]
    }

    /// Promote all entries to a common level.
    pub fn normalize_level(&mut self) {
        let mut level = 1u32;
        for e in &self.entries {
            level = lcm_u32(level, e.level);
        }
        for e in &mut self.entries {
            *e = e.promote(level);
        }
    }

    /// Stack the rows of `self` on top of the rows of `other`.
    pub fn stack(&self, other: &CycMatrix) -> CycMatrix {
        assert_eq!(self.cols, other.cols, "column count mismatch");
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        CycMatrix::new(self.rows + other.rows, self.cols, entries)
    }

    pub fn mul_vec(&self, v: &[Cyclotomic]) -> Vec<Cyclotomic> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = Cyclotomic::zero();
                for c in 0..self.cols {
                    let e = self.at(r, c);
                    if !e.is_zero() && !v[c].is_zero() {
                        acc = acc.add(&e.mul(&v[c]));
                    }
                }
                acc
            })
            .collect()
    }
}

/// Exact basis of the right null space of `m`.
pub fn kernel_basis(m: &CycMatrix) -> Vec<Vec<Cyclotomic>> {
    let rows: Vec<Vec<Cyclotomic>> = (0..m.rows)
        .map(|r| (0..m.cols).map(|c| m.at(r, c).clone()).collect())
        .collect();
    linalg::kernel_basis(rows, m.cols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn zeta(m: u32) -> Cyclotomic {
        Cyclotomic::root_of_unity(&Rat::new(BigInt::from(1), BigInt::from(m)))
    }

    #[test]
    fn roots_of_unity_basics() {
        assert!(Cyclotomic::root_of_unity(&rat(0)).is_one());
        assert_eq!(Cyclotomic::root_of_unity(&ratio(1, 2)), Cyclotomic::from_int(-1));
        let z8 = zeta(8);
        assert_eq!(z8.pow(4), Cyclotomic::from_int(-1));
        assert_eq!(z8.pow(8), Cyclotomic::one());
    }

    #[test]
    fn eighth_root_product() {
        let z8 = zeta(8);
        assert_eq!(z8.mul(&z8.pow(3)), Cyclotomic::from_int(-1));
    }

    #[test]
    fn additive_identity_and_conjugate() {
        let z4 = zeta(4);
        assert_eq!(z4.add(&Cyclotomic::zero()), z4);
        assert_eq!(z4.conjugate(), z4.neg());
        assert_eq!(
            Cyclotomic::root_of_unity(&ratio(1, 4)).conjugate(),
            Cyclotomic::root_of_unity(&ratio(-1, 4))
        );
    }

    #[test]
    fn division_and_zero_error() {
        let z8 = zeta(8);
        let q = z8.div(&z8.pow(3)).unwrap();
        assert_eq!(q, z8.pow(6));
        assert_eq!(
            z8.div(&Cyclotomic::zero()),
            Err(CycError::DivisionByZero)
        );
        // inverse in a non-monomial case
        let x = Cyclotomic::one().add(&z8);
        let inv = x.checked_inv().unwrap();
        assert!(x.mul(&inv).is_one());
    }

    #[test]
    fn canonicalize_descends_levels() {
        let z8 = zeta(8);
        let c = z8.pow(2).canonicalize();
        assert_eq!(c.level(), 4);
        assert_eq!(c, zeta(4));

        let zero = z8.add(&z8.neg()).canonicalize();
        assert_eq!(zero.level(), 1);
        assert!(zero.is_zero());

        let z4 = zeta(4);
        let x = z4.scale(&rat(2)).sub(&z4).canonicalize();
        assert_eq!(x, z4);
        assert_eq!(x.level(), 4);

        // idempotent
        assert_eq!(c.canonicalize().level(), 4);
    }

    #[test]
    fn display_format_is_stable() {
        let z8 = zeta(8);
        let x = Cyclotomic::from_rat(ratio(1, 2)).sub(&z8.pow(2).scale(&ratio(1, 2)));
        assert_eq!(x.to_string(), "1/2 - 1/2*z4");
        assert_eq!(zeta(4).to_string(), "z4");
        assert_eq!(Cyclotomic::from_int(-3).to_string(), "-3");
        assert_eq!(Cyclotomic::zero().to_string(), "0");
    }

    #[test]
    fn serde_round_trip() {
        let x = zeta(8).add(&Cyclotomic::from_rat(ratio(1, 3)));
        let json = serde_json::to_string(&x).unwrap();
        let back: Cyclotomic = serde_json::from_str(&json).unwrap();
        assert_eq!(x, back);
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&CycMatrix::identity(3)).is_empty());
        assert_eq!(kernel_basis(&CycMatrix::zero(2, 3)).len(), 3);

        let z4 = zeta(4);
        let m = CycMatrix::new(
            2,
            2,
            vec![
                Cyclotomic::one(),
                z4.clone(),
                z4.clone(),
                Cyclotomic::from_int(-1),
            ],
        );
        let basis = kernel_basis(&m);
        assert_eq!(basis.len(), 1);
        for v in &basis {
            for entry in m.mul_vec(v) {
                assert!(entry.is_zero());
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn root_of_unity_is_multiplicative(
            a in -64i64..64, qa in 1i64..=64, b in -64i64..64, qb in 1i64..=64,
        ) {
            let r = ratio(a, qa);
            let s = ratio(b, qb);
            let lhs = Cyclotomic::root_of_unity(&r).mul(&Cyclotomic::root_of_unity(&s));
            let rhs = Cyclotomic::root_of_unity(&(r + s));
            prop_assert!(lhs.sub(&rhs).is_zero());
        }

        #[test]
        fn conjugation_is_a_ring_involution(
            a in -8i64..8, qa in 1i64..=16, b in -8i64..8, qb in 1i64..=16, c in -4i64..4,
        ) {
            let x = Cyclotomic::root_of_unity(&ratio(a, qa)).add(&Cyclotomic::from_int(c));
            let y = Cyclotomic::root_of_unity(&ratio(b, qb));
            prop_assert_eq!(x.conjugate().conjugate(), x.clone());
            prop_assert_eq!(x.mul(&y).conjugate(), x.conjugate().mul(&y.conjugate()));
        }

        #[test]
        fn canonicalize_preserves_equality(a in -16i64..16, qa in 1i64..=32, k in 1u32..=4) {
            let x = Cyclotomic::root_of_unity(&ratio(a, qa)).add(&Cyclotomic::from_rat(ratio(1, 3)));
            // re-embed at an artificially larger level, then canonicalize back
            let inflated = x.promote(lcm_u32(x.level(), x.level() * k));
            let canon = inflated.canonicalize();
            prop_assert_eq!(canon.clone(), x);
            prop_assert_eq!(canon.canonicalize().level(), canon.level());
        }
    }
}
