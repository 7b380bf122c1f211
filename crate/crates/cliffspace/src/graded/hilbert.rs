/// Truncated integer power series for graded dimension bookkeeping.
/// `coeffs[i]` is the degree-`i` coefficient; the cap is `coeffs.len() - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    coeffs: Vec<i64>,
}

impl HilbertSeries {
    pub fn new(coeffs: Vec<i64>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least the constant term");
        HilbertSeries { coeffs }
    }

    pub fn one(cap: usize) -> Self {
        let mut coeffs = vec![0; cap + 1];
        coeffs[0] = 1;
        HilbertSeries { coeffs }
    }

    /// `(1 − z)^{−n}`: coefficients `C(n+i−1, i)`.
    pub fn inverse_power(n: usize, cap: usize) -> Self {
        let mut coeffs = vec![0i64; cap + 1];
        for (i, c) in coeffs.iter_mut().enumerate() {
            *c = binom((n + i).saturating_sub(1) as u64, i as u64) as i64;
        }
        HilbertSeries { coeffs }
    }

    /// `(1 + z)^n`: coefficients `C(n, i)`.
    pub fn binomial_power(n: usize, cap: usize) -> Self {
        let coeffs = (0..=cap).map(|i| binom(n as u64, i as u64) as i64).collect();
        HilbertSeries { coeffs }
    }

    pub fn cap(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Substitute `z → −z`.
    pub fn alternate(&self) -> HilbertSeries {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 0 { *c } else { -*c })
            .collect();
        HilbertSeries { coeffs }
    }

    /// Product truncated at the smaller cap.
    pub fn mul_trunc(&self, other: &HilbertSeries) -> HilbertSeries {
        let cap = self.cap().min(other.cap());
        let mut coeffs = vec![0i64; cap + 1];
        for i in 0..=cap {
            for j in 0..=(cap - i) {
                coeffs[i + j] += self.coeff(i) * other.coeff(j);
            }
        }
        HilbertSeries { coeffs }
    }

    pub fn is_one(&self) -> bool {
        self.coeff(0) == 1 && self.coeffs.iter().skip(1).all(|&c| c == 0)
    }

    /// Truncate or zero-extend to the given cap.
    pub fn truncate(&self, cap: usize) -> HilbertSeries {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(cap + 1, 0);
        HilbertSeries { coeffs }
    }
}

impl std::fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Koszul numerical certificate: `a(z) · b(−z) = 1` through the shared cap.
/// Symmetric in its arguments.
pub fn koszul_series_check(a: &HilbertSeries, b: &HilbertSeries) -> bool {
    debug_assert_eq!(a.cap(), b.cap(), "series caps should match");
    a.mul_trunc(&b.alternate()).is_one()
}

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}
