use std::fmt;

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Integer polynomial, coefficients in ascending degree. Arithmetic is exact
/// in `i128` and reports [`Error::Overflow`] instead of wrapping.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Polynomial {
    coeffs: Vec<i128>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<i128>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// Builds from coefficients listed from the leading term down.
    pub fn from_descending(coeffs: &[i128]) -> Self {
        Polynomial::new(coeffs.iter().rev().copied().collect())
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c as f64)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::new(Vec::new()));
        }
        let mut out = vec![0i128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                let term = a.checked_mul(b).ok_or(Error::Overflow)?;
                out[i + j] = out[i + j].checked_add(term).ok_or(Error::Overflow)?;
            }
        }
        Ok(Polynomial::new(out))
    }

    fn as_f64(&self) -> Vec<f64> {
        self.coeffs.iter().map(|&c| c as f64).collect()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
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
            match deg {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}")?;
                    }
                    if deg == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{deg}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

fn check_square<T>(m: &[Vec<T>]) -> Result<usize> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidParameters("matrix is not square".into()));
    }
    Ok(n)
}

/// `det(xI - M)` by Faddeev–LeVerrier, exact in `i128`.
///
/// `M_0 = 0, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k`.
/// The divisions are exact for integer input.
pub fn characteristic_polynomial(m: &[Vec<i128>]) -> Result<Polynomial> {
    let n = check_square(m)?;
    let mut coeffs = vec![0i128; n + 1];
    coeffs[n] = 1;
    let mut mk = vec![vec![0i128; n]; n];
    for k in 1..=n {
        let prev_c = coeffs[n - k + 1];
        let mut next = vec![vec![0i128; n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0i128;
                for t in 0..n {
                    let p = m[i][t].checked_mul(mk[t][j]).ok_or(Error::Overflow)?;
                    acc = acc.checked_add(p).ok_or(Error::Overflow)?;
                }
                if i == j {
                    acc = acc.checked_add(prev_c).ok_or(Error::Overflow)?;
                }
                next[i][j] = acc;
            }
        }
        mk = next;
        let mut trace = 0i128;
        for i in 0..n {
            for t in 0..n {
                let p = m[i][t].checked_mul(mk[t][i]).ok_or(Error::Overflow)?;
                trace = trace.checked_add(p).ok_or(Error::Overflow)?;
            }
        }
        debug_assert_eq!(trace % k as i128, 0);
        coeffs[n - k] = -(trace / k as i128);
    }
    Ok(Polynomial::new(coeffs))
}

type Q = Ratio<i128>;

fn q_add(a: Q, b: Q) -> Result<Q> {
    a.checked_add(&b).ok_or(Error::Overflow)
}

fn q_mul(a: Q, b: Q) -> Result<Q> {
    a.checked_mul(&b).ok_or(Error::Overflow)
}

/// `det(xI - M)` for a rational matrix, ascending coefficients.
pub fn characteristic_polynomial_rational(m: &[Vec<Q>]) -> Result<Vec<Q>> {
    let n = check_square(m)?;
    let mut coeffs = vec![Q::zero(); n + 1];
    coeffs[n] = Q::from_integer(1);
    let mut mk = vec![vec![Q::zero(); n]; n];
    for k in 1..=n {
        let prev_c = coeffs[n - k + 1];
        let mut next = vec![vec![Q::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = Q::zero();
                for t in 0..n {
                    acc = q_add(acc, q_mul(m[i][t], mk[t][j])?)?;
                }
                if i == j {
                    acc = q_add(acc, prev_c)?;
                }
                next[i][j] = acc;
            }
        }
        mk = next;
        let mut trace = Q::zero();
        for i in 0..n {
            for t in 0..n {
                trace = q_add(trace, q_mul(m[i][t], mk[t][i])?)?;
            }
        }
        coeffs[n - k] = Q::zero().checked_sub(&(trace / Q::from_integer(k as i128))).ok_or(Error::Overflow)?;
    }
    Ok(coeffs)
}

fn eval_f64(c: &[f64], x: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &a| acc * x + a)
}

fn derivative_f64(c: &[f64]) -> Vec<f64> {
    c.iter().enumerate().skip(1).map(|(i, &a)| a * i as f64).collect()
}

fn trim_f64(mut c: Vec<f64>) -> Vec<f64> {
    while c.last() == Some(&0.0) {
        c.pop();
    }
    c
}

/// Root of a polynomial that is monotone on `[a, b]` with a sign change:
/// bisection to 1e-12, then a guarded Newton polish.
fn refine(c: &[f64], mut a: f64, mut b: f64) -> f64 {
    let fa = eval_f64(c, a);
    for _ in 0..200 {
        if b - a <= 1e-13 * (1.0 + b.abs()) {
            break;
        }
        let mid = 0.5 * (a + b);
        let fm = eval_f64(c, mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm < 0.0) == (fa < 0.0) {
            a = mid;
        } else {
            b = mid;
        }
    }
    let d = derivative_f64(c);
    let mut x = 0.5 * (a + b);
    for _ in 0..3 {
        let slope = eval_f64(&d, x);
        if slope == 0.0 {
            break;
        }
        let step = x - eval_f64(c, x) / slope;
        if step < a || step > b {
            break;
        }
        x = step;
    }
    x
}

/// All distinct real roots of `c` inside `[lo, hi]`, ascending. Roots of the
/// derivative split the interval into monotone pieces; each piece holds at
/// most one root. Even-multiplicity roots are caught at the critical points.
fn real_roots_in(c: &[f64], lo: f64, hi: f64) -> Vec<f64> {
    let c = trim_f64(c.to_vec());
    match c.len() {
        0 | 1 => return Vec::new(),
        2 => {
            let r = -c[0] / c[1];
            return if (lo..=hi).contains(&r) { vec![r] } else { Vec::new() };
        }
        _ => {}
    }
    let crit = real_roots_in(&derivative_f64(&c), lo, hi);
    let mut knots = vec![lo];
    knots.extend(crit.iter().copied().filter(|&x| x > lo && x < hi));
    knots.push(hi);
    let scale = |x: f64| c.iter().enumerate().map(|(i, a)| a.abs() * x.abs().powi(i as i32)).sum::<f64>();
    let mut roots: Vec<f64> = Vec::new();
    for w in knots.windows(2) {
        let (a, b) = (w[0], w[1]);
        let (fa, fb) = (eval_f64(&c, a), eval_f64(&c, b));
        if fa == 0.0 {
            roots.push(a);
        } else if fb != 0.0 && (fa < 0.0) != (fb < 0.0) {
            roots.push(refine(&c, a, b));
        }
    }
    if eval_f64(&c, hi) == 0.0 {
        roots.push(hi);
    }
    for &x in &crit {
        if eval_f64(&c, x).abs() <= 1e-12 * scale(x).max(1.0) {
            roots.push(x);
        }
    }
    roots.sort_by(f64::total_cmp);
    roots.dedup_by(|a, b| (*a - *b).abs() <= 1e-10 * (1.0 + b.abs()));
    roots
}

/// Largest real root of `p` inside `[lo, hi]`.
pub fn largest_real_root(p: &Polynomial, lo: f64, hi: f64) -> Result<f64> {
    if !(lo.is_finite() && hi.is_finite()) || lo > hi || p.is_zero() {
        return Err(Error::NoRealRoot { lo, hi });
    }
    real_roots_in(&p.as_f64(), lo, hi)
        .last()
        .copied()
        .ok_or(Error::NoRealRoot { lo, hi })
}

/// Cauchy bound: every root lies in `[-B, B]`.
pub fn root_bound(p: &Polynomial) -> f64 {
    let c = p.coeffs();
    let Some(&lead) = c.last() else {
        return 0.0;
    };
    1.0 + c[..c.len() - 1]
        .iter()
        .map(|&a| (a as f64 / lead as f64).abs())
        .fold(0.0, f64::max)
}

/// Largest real root anywhere on the line.
pub fn largest_root(p: &Polynomial) -> Result<f64> {
    let b = root_bound(p);
    largest_real_root(p, -b, b)
}

/// `x^3 - (n-4)x^2 - (n-1)x + 2(n-4)`.
pub fn theta_polynomial(n: usize) -> Polynomial {
    let n = n as i128;
    Polynomial::from_descending(&[1, -(n - 4), -(n - 1), 2 * (n - 4)])
}

/// Largest root of [`theta_polynomial`]; `n` must be even and at least 4.
pub fn theta(n: usize) -> Result<f64> {
    if n < 4 || n % 2 == 1 {
        return Err(Error::InvalidParameters(format!("theta needs even n >= 4, got {n}")));
    }
    largest_root(&theta_polynomial(n))
}
