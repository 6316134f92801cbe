//! Quadrature grids on the interior of the box `[0, L]`.

use serde::Serialize;

use crate::Float;

/// Node-placement rule of a [`Grid`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GridRule {
    Uniform,
    GaussLegendreComposite,
}

/// Quadrature nodes and weights strictly inside `(0, L)`.
#[derive(Debug, Clone)]
pub struct Grid<T> {
    points: Vec<T>,
    weights: Vec<T>,
    rule: GridRule,
    length: T,
}

impl<T: Float> Grid<T> {
    /// Midpoint rule with `n` equal cells; nodes at cell centers.
    pub fn uniform(length: T, n: usize) -> Self {
        assert!(n >= 2, "grid needs at least 2 points");
        assert!(length > T::zero(), "box length must be positive");
        let h = length / T::cast(n);
        let half = T::cast(0.5);
        let points = (0..n).map(|i| (T::cast(i) + half) * h).collect();
        let weights = vec![h; n];
        Grid {
            points,
            weights,
            rule: GridRule::Uniform,
            length,
        }
    }

    /// Composite Gauss–Legendre rule: `panels` equal panels with
    /// `panel_points` nodes each.
    pub fn gauss_legendre(length: T, panels: usize, panel_points: usize) -> Self {
        assert!(panels >= 1 && panel_points >= 2, "degenerate quadrature rule");
        assert!(length > T::zero(), "box length must be positive");
        let (xg, wg) = legendre_nodes::<T>(panel_points);
        let mut points = Vec::with_capacity(panels * panel_points);
        let mut weights = Vec::with_capacity(panels * panel_points);
        let width = length / T::cast(panels);
        let half = T::cast(0.5);
        for p in 0..panels {
            let lo = T::cast(p) * width;
            let mid = lo + half * width;
            let scale = half * width;
            for (&x, &w) in xg.iter().zip(&wg) {
                points.push(mid + scale * x);
                weights.push(scale * w);
            }
        }
        Grid {
            points,
            weights,
            rule: GridRule::GaussLegendreComposite,
            length,
        }
    }

    pub fn points(&self) -> &[T] {
        &self.points
    }

    pub fn weights(&self) -> &[T] {
        &self.weights
    }

    pub fn rule(&self) -> GridRule {
        self.rule
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Length of the interval the grid spans, i.e. the box size `L`.
    pub fn length(&self) -> T {
        self.length
    }

    pub fn integrate(&self, mut f: impl FnMut(T) -> T) -> T {
        self.points
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

/// Gauss–Legendre nodes and weights on `[-1, 1]`, by Newton iteration on the
/// Legendre recurrence.
pub fn legendre_nodes<T: Float>(n: usize) -> (Vec<T>, Vec<T>) {
    assert!(n >= 1);
    let mut nodes = vec![T::zero(); n];
    let mut weights = vec![T::zero(); n];
    let one = T::one();
    let two = T::cast(2.0);
    // only the lower half; the rest follows by symmetry
    for i in 0..n.div_ceil(2) {
        let mut x = (T::PI() * (T::cast(i) + T::cast(0.75)) / (T::cast(n) + T::cast(0.5))).cos();
        let mut dp = T::zero();
        for _ in 0..100 {
            // p_n(x) and its derivative via the three-term recurrence
            let mut p0 = one;
            let mut p1 = x;
            for k in 2..=n {
                let kf = T::cast(k);
                let p2 = ((two * kf - one) * x * p1 - (kf - one) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            // here p1 = p_n, p0 = p_{n-1}
            dp = T::cast(n) * (x * p1 - p0) / (x * x - one);
            let dx = p1 / dp;
            x = x - dx;
            if dx.abs() <= T::epsilon() * (one + x.abs()) {
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = two / ((one - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = T::zero();
    }
    (nodes, weights)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn legendre_16_integrates_polynomials_exactly() {
        let grid = Grid::<f64>::gauss_legendre(2.0, 1, 16);
        // degree-31 polynomial on [0, 2]
        let exact = 2f64.powi(32) / 32.0;
        let got = grid.integrate(|x| x.powi(31));
        assert_abs_diff_eq!(got, exact, epsilon = 1e-9 * exact);
    }

    #[test]
    fn composite_rule_integrates_oscillatory_integrand() {
        let grid = Grid::<f64>::gauss_legendre(100.0, 400, 16);
        let got = grid.integrate(|x| (0.3 * x).sin());
        let exact = (1.0 - 30f64.cos()) / 0.3;
        assert_abs_diff_eq!(got, exact, epsilon = 1e-12);
    }

    #[test]
    fn uniform_midpoint_nodes_are_interior_and_increasing() {
        let grid = Grid::<f64>::uniform(10.0, 17);
        let pts = grid.points();
        assert!(pts.first().unwrap() > &0.0 && pts.last().unwrap() < &10.0);
        assert!(pts.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(grid.rule(), GridRule::Uniform);
        assert_abs_diff_eq!(grid.weights().iter().sum::<f64>(), 10.0, epsilon = 1e-12);
    }

    #[test]
    fn gauss_nodes_are_interior_and_increasing() {
        let grid = Grid::<f64>::gauss_legendre(100.0, 7, 16);
        let pts = grid.points();
        assert!(pts.first().unwrap() > &0.0 && pts.last().unwrap() < &100.0);
        assert!(pts.windows(2).all(|w| w[0] < w[1]));
        assert_abs_diff_eq!(grid.weights().iter().sum::<f64>(), 100.0, epsilon = 1e-10);
    }

    #[test]
    fn legendre_nodes_match_known_5_point_rule() {
        let (x, w) = legendre_nodes::<f64>(5);
        assert_abs_diff_eq!(x[2], 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(x[4], 0.906179845938664, epsilon = 1e-14);
        assert_abs_diff_eq!(w[2], 128.0 / 225.0, epsilon = 1e-14);
        assert_abs_diff_eq!(w[4], 0.236926885056189, epsilon = 1e-14);
    }

    #[test]
    fn single_precision_nodes_work() {
        let grid = Grid::<f32>::gauss_legendre(1.0, 4, 8);
        let got = grid.integrate(|x| x * x);
        assert!((got - 1.0 / 3.0).abs() < 1e-6);
    }
}
