//! Truncated Laurent series in one variable `q` with exact `i64` coefficients.
//!
//! A [`LaurentSeries`] is known exactly for every exponent below its `order`
//! and unknown from `order` upward. Storage begins at the lowest nonzero
//! exponent, so a series with leading zeros and the same series without them
//! compare equal. All arithmetic is checked: overflow surfaces as
//! [`SeriesError::Overflow`] instead of wrapping.
//!
//! Also here are the two building blocks every generating function in the
//! catalog is made of: [`pochhammer`] for `(a; q^d)_n` and `(a; q^d)_inf`, and
//! [`gauss_binomial`] for the Gaussian polynomials in `q` or `q^2`.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("integer overflow in series arithmetic")]
    Overflow,
    #[error("cannot invert the zero series")]
    ZeroSeries,
    #[error("leading coefficient {0} is not a unit")]
    NonUnitLeading(i64),
    #[error("infinite product with base exponent {base_exp} does not converge coefficientwise")]
    Divergent { base_exp: i64 },
    #[error("pochhammer step must be positive, got {0}")]
    InvalidStep(i64),
    #[error("series is only known below q^{known}, q^{requested} requested")]
    PrecisionLost { known: i64, requested: i64 },
}

pub type Result<T> = std::result::Result<T, SeriesError>;

/// Truncated Laurent series `sum_{e < order} c_e q^e`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentSeries {
    min_exp: i64,
    coeffs: Vec<i64>,
    order: i64,
}

impl LaurentSeries {
    /// Builds a series from a dense coefficient run starting at `min_exp`.
    ///
    /// Entries at exponents `>= order` are dropped and missing ones up to
    /// `order` are zero.
    pub fn from_coeffs(min_exp: i64, coeffs: Vec<i64>, order: i64) -> Self {
        let mut s = LaurentSeries { min_exp, coeffs, order };
        s.normalize();
        s
    }

    /// Builds a series from sparse `(exponent, coefficient)` terms.
    pub fn from_terms(terms: &[(i64, i64)], order: i64) -> Result<Self> {
        let lo = terms.iter().map(|&(e, _)| e).min().unwrap_or(order).min(order);
        let mut coeffs = vec![0i64; (order - lo) as usize];
        for &(e, c) in terms {
            if e < order {
                let slot = &mut coeffs[(e - lo) as usize];
                *slot = slot.checked_add(c).ok_or(SeriesError::Overflow)?;
            }
        }
        Ok(Self::from_coeffs(lo, coeffs, order))
    }

    pub fn zero(order: i64) -> Self {
        LaurentSeries { min_exp: order, coeffs: Vec::new(), order }
    }

    pub fn one(order: i64) -> Self {
        Self::monomial(0, 1, order)
    }

    /// `coeff * q^exp`, truncated at `order`.
    pub fn monomial(exp: i64, coeff: i64, order: i64) -> Self {
        if exp >= order || coeff == 0 {
            return Self::zero(order);
        }
        let mut coeffs = vec![0; (order - exp) as usize];
        coeffs[0] = coeff;
        LaurentSeries { min_exp: exp, coeffs, order }
    }

    fn normalize(&mut self) {
        if self.min_exp >= self.order {
            self.min_exp = self.order;
            self.coeffs.clear();
            return;
        }
        let len = (self.order - self.min_exp) as usize;
        self.coeffs.resize(len, 0);
        let lead = self.coeffs.iter().position(|&c| c != 0).unwrap_or(len);
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.min_exp += lead as i64;
        }
    }

    /// Lowest stored exponent; equals the valuation unless the series is zero.
    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    /// Exponents `>= order` are unknown.
    pub fn order(&self) -> i64 {
        self.order
    }

    /// Coefficients from `min_exp` up to `order - 1`.
    pub fn coefficients(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Exponent of the lowest nonzero coefficient.
    pub fn valuation(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.min_exp)
    }

    /// Coefficient at `q^exp`, or `None` when `exp` lies beyond the truncation.
    pub fn coeff(&self, exp: i64) -> Option<i64> {
        if exp >= self.order {
            None
        } else if exp < self.min_exp {
            Some(0)
        } else {
            Some(self.coeffs[(exp - self.min_exp) as usize])
        }
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(move |(i, &c)| (self.min_exp + i as i64, c))
    }

    /// Dense coefficients at exponents `0..order`, ignoring negative exponents.
    pub fn nonnegative_coefficients(&self) -> Vec<i64> {
        (0..self.order.max(0)).map(|e| self.coeff(e).unwrap_or(0)).collect()
    }

    /// Nonzero terms at negative exponents.
    pub fn negative_terms(&self) -> Vec<(i64, i64)> {
        self.terms().take_while(|&(e, _)| e < 0).collect()
    }

    /// Restricts to exponents below `order`, which must not exceed the current order.
    pub fn truncate(&self, order: i64) -> Result<Self> {
        if order > self.order {
            return Err(SeriesError::PrecisionLost { known: self.order, requested: order });
        }
        let mut s = self.clone();
        s.order = order;
        s.normalize();
        Ok(s)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.combine(other, 1)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, -1)
    }

    fn combine(&self, other: &Self, sign: i64) -> Result<Self> {
        let order = self.order.min(other.order);
        let lo = self.min_exp.min(other.min_exp).min(order);
        let mut coeffs = vec![0i64; (order - lo) as usize];
        for (e, c) in self.terms().take_while(|&(e, _)| e < order) {
            coeffs[(e - lo) as usize] = c;
        }
        for (e, c) in other.terms().take_while(|&(e, _)| e < order) {
            let slot = &mut coeffs[(e - lo) as usize];
            let c = c.checked_mul(sign).ok_or(SeriesError::Overflow)?;
            *slot = slot.checked_add(c).ok_or(SeriesError::Overflow)?;
        }
        Ok(Self::from_coeffs(lo, coeffs, order))
    }

    pub fn checked_neg(&self) -> Result<Self> {
        self.scale(-1)
    }

    pub fn scale(&self, factor: i64) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|&c| c.checked_mul(factor).ok_or(SeriesError::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_coeffs(self.min_exp, coeffs, self.order))
    }

    /// Cauchy product. The result is exact below
    /// `min(self.order + other.min_exp, other.order + self.min_exp)`.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let min_exp = self.min_exp + other.min_exp;
        let order = (self.order + other.min_exp).min(other.order + self.min_exp);
        let len = (order - min_exp).max(0) as usize;
        let mut out = vec![0i64; len];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate().take(len.saturating_sub(i)) {
                if b == 0 {
                    continue;
                }
                let p = a.checked_mul(b).ok_or(SeriesError::Overflow)?;
                out[i + j] = out[i + j].checked_add(p).ok_or(SeriesError::Overflow)?;
            }
        }
        Ok(Self::from_coeffs(min_exp, out, order))
    }

    /// Multiplicative inverse of a series whose lowest nonzero coefficient is `±1`.
    ///
    /// For `f = q^v u` known below `order`, the inverse is known below `order - 2v`.
    pub fn reciprocal(&self) -> Result<Self> {
        let v = self.valuation().ok_or(SeriesError::ZeroSeries)?;
        let lead = self.coeffs[0];
        if lead != 1 && lead != -1 {
            return Err(SeriesError::NonUnitLeading(lead));
        }
        let len = self.coeffs.len();
        let mut inv = vec![0i64; len];
        inv[0] = lead;
        for i in 1..len {
            let mut acc = 0i64;
            for j in 1..=i {
                let u = self.coeffs[j];
                if u != 0 {
                    let p = u.checked_mul(inv[i - j]).ok_or(SeriesError::Overflow)?;
                    acc = acc.checked_add(p).ok_or(SeriesError::Overflow)?;
                }
            }
            inv[i] = acc.checked_mul(-lead).ok_or(SeriesError::Overflow)?;
        }
        Ok(Self::from_coeffs(-v, inv, self.order - 2 * v))
    }

    /// Multiplies by `q^exp`; both `min_exp` and `order` move by `exp`.
    pub fn shift(&self, exp: i64) -> Self {
        LaurentSeries {
            min_exp: self.min_exp + exp,
            coeffs: self.coeffs.clone(),
            order: self.order + exp,
        }
    }

    /// Sums an iterator of series; the empty sum is the zero series at `order`.
    pub fn sum<I>(terms: I, order: i64) -> Result<Self>
    where
        I: IntoIterator<Item = Self>,
    {
        terms.into_iter().try_fold(Self::zero(order), |acc, t| acc.checked_add(&t))
    }

    /// Product of an iterator of series, starting from `1` at `order`.
    pub fn product<I>(factors: I, order: i64) -> Result<Self>
    where
        I: IntoIterator<Item = Self>,
    {
        factors.into_iter().try_fold(Self::one(order), |acc, f| acc.checked_mul(&f))
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.terms() {
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.unsigned_abs();
            match (a, e) {
                (_, 0) => write!(f, "{a}")?,
                (1, 1) => write!(f, "q")?,
                (1, _) => write!(f, "q^{e}")?,
                (_, 1) => write!(f, "{a}q")?,
                _ => write!(f, "{a}q^{e}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order)
    }
}

/// Sign of `a = ±q^j` in `(a; q^d)_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PochCount {
    Finite(u64),
    Infinite,
}

/// `(a; q^step)_count` with `a = ±q^base_exp`, i.e. the product of
/// `1 - a q^{step * t}` over `0 <= t < count`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PochSpec {
    pub sign: Sign,
    pub base_exp: i64,
    pub step: i64,
    pub count: PochCount,
}

impl PochSpec {
    pub fn finite(sign: Sign, base_exp: i64, step: i64, count: u64) -> Self {
        PochSpec { sign, base_exp, step, count: PochCount::Finite(count) }
    }

    pub fn infinite(sign: Sign, base_exp: i64, step: i64) -> Self {
        PochSpec { sign, base_exp, step, count: PochCount::Infinite }
    }

    /// `(q; q)_n`
    pub fn q_factorial(n: u64) -> Self {
        Self::finite(Sign::Plus, 1, 1, n)
    }
}

/// Expands the q-Pochhammer symbol described by `spec` below `q^order`.
pub fn pochhammer(spec: PochSpec, order: i64) -> Result<LaurentSeries> {
    if spec.step < 1 {
        return Err(SeriesError::InvalidStep(spec.step));
    }
    // factor is 1 - a_coeff * q^e
    let a_coeff = match spec.sign {
        Sign::Plus => 1,
        Sign::Minus => -1,
    };
    let count = match spec.count {
        PochCount::Finite(n) => n,
        PochCount::Infinite => {
            if spec.base_exp < 1 {
                return Err(SeriesError::Divergent { base_exp: spec.base_exp });
            }
            // factors with exponent >= order are 1 below the truncation
            let span = order - spec.base_exp;
            if span <= 0 { 0 } else { ((span - 1) / spec.step + 1) as u64 }
        }
    };
    let exps: Vec<i64> = (0..count as i64).map(|t| spec.base_exp + spec.step * t).collect();
    let mut scalar = 1i64;
    let mut shift = 0i64;
    for &e in &exps {
        if e == 0 {
            scalar = scalar.checked_mul(1 - a_coeff).ok_or(SeriesError::Overflow)?;
        } else if e < 0 {
            shift += e;
        }
    }
    if scalar == 0 {
        return Ok(LaurentSeries::zero(order));
    }
    // Work with the polynomial q^{-shift} * prod, which has only nonnegative
    // exponents; negative-exponent factors 1 - a q^e become q^e (q^{-e} - a).
    let work = order - shift;
    if work <= 0 {
        return Ok(LaurentSeries::zero(order));
    }
    let mut poly = vec![0i64; work as usize];
    poly[0] = scalar;
    for &e in &exps {
        match e {
            0 => {}
            e if e > 0 => {
                // multiply by (1 - a q^e)
                let e = e as usize;
                for i in (e..poly.len()).rev() {
                    let p = poly[i - e].checked_mul(a_coeff).ok_or(SeriesError::Overflow)?;
                    poly[i] = poly[i].checked_sub(p).ok_or(SeriesError::Overflow)?;
                }
            }
            e => {
                // multiply by (q^{-e} - a)
                let d = (-e) as usize;
                for i in (0..poly.len()).rev() {
                    let hi = if i >= d { poly[i - d] } else { 0 };
                    let lo = poly[i].checked_mul(a_coeff).ok_or(SeriesError::Overflow)?;
                    poly[i] = hi.checked_sub(lo).ok_or(SeriesError::Overflow)?;
                }
            }
        }
    }
    Ok(LaurentSeries::from_coeffs(shift, poly, order))
}

/// `1 / (q^step; q^step)_n`, and the zero series for negative `n`.
///
/// The zero convention for negative `n` is what every summation in the catalog
/// relies on: `1/(q;q)_{-j} = 0` for `j >= 1`.
pub fn inverse_q_factorial(n: i64, step: i64, order: i64) -> Result<LaurentSeries> {
    if n < 0 {
        return Ok(LaurentSeries::zero(order));
    }
    pochhammer(PochSpec::finite(Sign::Plus, step, step, n as u64), order)?.reciprocal()
}

/// Gaussian binomial `[a choose b]` in the variable `q^step`, truncated at `order`.
///
/// Zero when `b < 0` or `b > a`. Built as the running product of
/// `(1 - q^{step(a-b+i)}) / (1 - q^{step i})` for `i = 1..=b`; every partial
/// product is itself a Gaussian polynomial, so each division is exact.
pub fn gauss_binomial(a: i64, b: i64, step: i64, order: i64) -> Result<LaurentSeries> {
    if step < 1 {
        return Err(SeriesError::InvalidStep(step));
    }
    if a < 0 || b < 0 || b > a || order <= 0 {
        return Ok(LaurentSeries::zero(order));
    }
    let b = b.min(a - b);
    let len = order as usize;
    let mut poly = vec![0i64; len];
    poly[0] = 1;
    for i in 1..=b {
        let up = (step * (a - b + i)) as usize;
        for j in (up..len).rev() {
            poly[j] = poly[j].checked_sub(poly[j - up]).ok_or(SeriesError::Overflow)?;
        }
        let down = (step * i) as usize;
        for j in down..len {
            poly[j] = poly[j].checked_add(poly[j - down]).ok_or(SeriesError::Overflow)?;
        }
    }
    Ok(LaurentSeries::from_coeffs(0, poly, order))
}
