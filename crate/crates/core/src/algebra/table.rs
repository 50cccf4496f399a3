//! Exact check of the su(n,1) bracket table.

use super::basis::{alpha, beta, e, h};
use crate::error::check_dim;
use crate::exact::{ExactMatrix, GaussInt};
use crate::report::{IdentityCheck, VerificationReport};

struct Tally {
    identity: &'static str,
    instances: u64,
    failures: u64,
    worst: i64,
}

impl Tally {
    fn new(identity: &'static str) -> Self {
        Tally {
            identity,
            instances: 0,
            failures: 0,
            worst: 0,
        }
    }

    fn check(&mut self, lhs: ExactMatrix, rhs: ExactMatrix) {
        let resid = (&lhs - &rhs).max_abs();
        self.instances += 1;
        if resid != 0 {
            self.failures += 1;
        }
        self.worst = self.worst.max(resid);
    }

    fn finish(self) -> IdentityCheck {
        IdentityCheck {
            identity: self.identity.to_string(),
            instances: self.instances,
            failures: self.failures,
            worst_residual: self.worst as f64,
        }
    }
}

/// Checks the fifteen bracket identities of su(n,1) for every admissible
/// index combination with exact Gaussian-integer arithmetic. Identities
/// quantified over pairs `j < k <= n` have no instances at `n = 1`.
pub fn verify_bracket_table(n: usize) -> crate::Result<VerificationReport> {
    check_dim(n)?;
    let p = n + 1;
    let i = |m: ExactMatrix| m.scale(GaussInt::I);
    let d = |a: usize, b: usize| i64::from(a == b);
    let a = |j, k| alpha(n, j, k);
    let b = |j, k| beta(n, j, k);
    let ib = |j, k| i(beta(n, j, k));
    let ia = |j, k| i(alpha(n, j, k));
    // Integer linear combination of matrices.
    let lc = |terms: &[(i64, ExactMatrix)]| {
        terms
            .iter()
            .fold(ExactMatrix::zeros(n + 1), |acc, (c, m)| &acc + &m.scale_int(*c))
    };
    let br = |x: &ExactMatrix, y: &ExactMatrix| x.bracket(y);
    let zero = ExactMatrix::zeros(n + 1);

    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|j| (j + 1..=n).map(move |k| (j, k)))
        .collect();
    let singles = 1..=n;

    let mut t: Vec<Tally> = [
        "(1) [alpha_jk, alpha_lm]",
        "(2) [i beta_jk, i beta_lm]",
        "(3) [h_j, h_k]",
        "(4) [alpha_jk, i beta_lm]",
        "(5) [alpha_jk, h_l]",
        "(6) [h_l, i beta_jk]",
        "(7) [alpha_jk, beta_l,n+1]",
        "(8) [alpha_jk, i alpha_l,n+1]",
        "(9) [i beta_jk, beta_l,n+1]",
        "(10) [i beta_jk, i alpha_l,n+1]",
        "(11) [h_j, beta_l,n+1]",
        "(12) [h_j, i alpha_l,n+1]",
        "(13) [beta_j,n+1, beta_k,n+1]",
        "(14) [i alpha_j,n+1, i alpha_k,n+1]",
        "(15) [i alpha_j,n+1, beta_k,n+1]",
    ]
    .into_iter()
    .map(Tally::new)
    .collect();

    for &(j, k) in &pairs {
        for &(l, m) in &pairs {
            t[0].check(
                br(&a(j, k), &a(l, m)),
                lc(&[
                    (d(k, l), a(j, m)),
                    (d(k, m), a(l, j)),
                    (d(j, m), a(k, l)),
                    (d(l, j), a(m, k)),
                ]),
            );
            t[1].check(
                br(&ib(j, k), &ib(l, m)),
                lc(&[
                    (-d(k, l), a(j, m)),
                    (-d(k, m), a(j, l)),
                    (-d(j, m), a(k, l)),
                    (-d(l, j), a(k, m)),
                ]),
            );
            t[3].check(
                br(&a(j, k), &ib(l, m)),
                i(lc(&[
                    (d(k, l), b(j, m)),
                    (d(k, m), b(j, l)),
                    (-d(j, m), b(k, l)),
                    (-d(l, j), b(k, m)),
                ])),
            );
        }
        for l in singles.clone() {
            t[4].check(
                br(&a(j, k), &h(n, l)),
                i(lc(&[(d(k, l), b(j, l)), (-d(l, j), b(k, l))])),
            );
            t[5].check(
                br(&h(n, l), &ib(j, k)),
                lc(&[(d(k, l), a(j, l)), (d(l, j), a(k, l))]),
            );
            t[6].check(
                br(&a(j, k), &b(l, p)),
                lc(&[(d(l, k), b(j, p)), (-d(j, l), b(k, p))]),
            );
            t[7].check(
                br(&a(j, k), &ia(l, p)),
                i(lc(&[(d(k, l), a(j, p)), (-d(l, j), a(k, p))])),
            );
            t[8].check(
                br(&ib(j, k), &b(l, p)),
                i(lc(&[(d(l, k), a(j, p)), (d(j, l), a(k, p))])),
            );
            t[9].check(
                br(&ib(j, k), &ia(l, p)),
                lc(&[(-d(l, k), b(j, p)), (-d(j, l), b(k, p))]),
            );
        }
    }

    for j in singles.clone() {
        for k in singles.clone() {
            t[2].check(br(&h(n, j), &h(n, k)), zero.clone());
            t[10].check(
                br(&h(n, j), &b(k, p)),
                i(lc(&[(d(j, k), a(j, p)), (1, a(k, p))])),
            );
            t[11].check(
                br(&h(n, j), &ia(k, p)),
                lc(&[(-d(j, k), b(j, p)), (-1, b(k, p))]),
            );
            t[12].check(br(&b(j, p), &b(k, p)), a(j, k));
            t[13].check(br(&ia(j, p), &ia(k, p)), a(j, k));
            t[14].check(
                br(&ia(j, p), &b(k, p)),
                i(lc(&[(1, b(j, k)), (-2 * d(j, k), e(n, p, p))])),
            );
        }
    }

    Ok(VerificationReport {
        identities: t.into_iter().map(Tally::finish).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n1_skips_pair_identities() {
        let r = verify_bracket_table(1).unwrap();
        assert!(r.passed());
        let skipped: Vec<_> = r
            .identities
            .iter()
            .filter(|c| c.is_skipped())
            .map(|c| c.identity.split(' ').next().unwrap().to_string())
            .collect();
        assert_eq!(
            skipped,
            ["(1)", "(2)", "(4)", "(5)", "(6)", "(7)", "(8)", "(9)", "(10)"]
        );
        for label in ["(3)", "(11)", "(12)", "(13)", "(14)", "(15)"] {
            assert_eq!(r.get(label).unwrap().instances, 1);
        }
    }

    #[test]
    fn n2_all_pass_with_expected_instance_counts() {
        let r = verify_bracket_table(2).unwrap();
        assert_eq!(r.identities.len(), 15);
        assert_eq!(r.total_failures(), 0);
        assert_eq!(r.get("(1)").unwrap().instances, 1);
        assert_eq!(r.get("(5)").unwrap().instances, 2);
        assert_eq!(r.get("(15)").unwrap().instances, 4);
    }

    #[test]
    fn n5_all_pass() {
        let r = verify_bracket_table(5).unwrap();
        assert!(r.passed());
        assert!(r.identities.iter().all(|c| c.instances > 0));
    }

    #[test]
    fn misprinted_identity_would_be_caught() {
        // Sanity check on the harness: flipping the sign of (13) must fail.
        let n = 2;
        let mut t = Tally::new("flip");
        let b1 = beta(n, 1, 3);
        let b2 = beta(n, 2, 3);
        t.check(b1.bracket(&b2), alpha(n, 2, 1));
        let c = t.finish();
        assert_eq!(c.failures, 1);
        assert_eq!(c.worst_residual, 2.0);
    }
}
