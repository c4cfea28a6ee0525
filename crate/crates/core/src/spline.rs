//! Natural cubic spline on a uniform grid, used to cache Fourier profiles
//! that are evaluated millions of times inside nested quadratures.

#[derive(Debug, Clone)]
pub(crate) struct UniformSpline {
    x0: f64,
    h: f64,
    y: Vec<f64>,
    /// Second derivatives at the nodes.
    m: Vec<f64>,
}

impl UniformSpline {
    /// Build from samples y_i = f(x0 + i h), i = 0..n.
    pub fn new(x0: f64, h: f64, y: Vec<f64>) -> Self {
        let n = y.len();
        assert!(n >= 3, "spline needs at least 3 nodes");
        // Thomas algorithm for the natural-spline tridiagonal system
        // (diagonal 4, off-diagonals 1, in units of h).
        let mut m = vec![0.0; n];
        let mut cp = vec![0.0; n];
        let mut dp = vec![0.0; n];
        cp[0] = 0.0;
        dp[0] = 0.0;
        for i in 1..n - 1 {
            let denom = 4.0 - cp[i - 1];
            cp[i] = 1.0 / denom;
            let r = 6.0 * (y[i + 1] - 2.0 * y[i] + y[i - 1]) / (h * h);
            dp[i] = (r - dp[i - 1]) / denom;
        }
        m[n - 1] = 0.0;
        for i in (1..n - 1).rev() {
            m[i] = dp[i] - cp[i] * m[i + 1];
        }
        m[0] = 0.0;
        UniformSpline { x0, h, y, m }
    }

    /// Last grid point.
    pub fn x_max(&self) -> f64 {
        self.x0 + self.h * (self.y.len() - 1) as f64
    }

    /// Evaluate; clamps to the end values outside the grid.
    pub fn eval(&self, x: f64) -> f64 {
        let n = self.y.len();
        let t = (x - self.x0) / self.h;
        if t <= 0.0 {
            return self.y[0];
        }
        if t >= (n - 1) as f64 {
            return self.y[n - 1];
        }
        let i = t.floor() as usize;
        let u = t - i as f64;
        let h2 = self.h * self.h;
        let a = 1.0 - u;
        a * self.y[i]
            + u * self.y[i + 1]
            + h2 / 6.0 * ((a * a * a - a) * self.m[i] + (u * u * u - u) * self.m[i + 1])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn reproduces_smooth_function() {
        let n = 800;
        let h = 10.0 / n as f64;
        let f = |x: f64| (-0.3 * x).exp() * (x * 0.7).cos();
        let y: Vec<f64> = (0..=n).map(|i| f(i as f64 * h)).collect();
        let s = UniformSpline::new(0.0, h, y);
        for k in 0..200 {
            let x = 0.11 + 9.7 * k as f64 / 200.0;
            assert_abs_diff_eq!(s.eval(x), f(x), epsilon = 1e-7);
        }
    }
}
