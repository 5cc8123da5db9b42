//! Check records shared by every verification routine.

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

/// A named statement a check is bound to, written as a formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Anchor {
    pub id: &'static str,
    pub statement: &'static str,
}

pub const ANCHORS: &[Anchor] = &[
    Anchor {
        id: "evaluator-tail",
        statement: "prod_{x not in S} (1 - tau_x z^{deg x})^{-1} = Q(z) + N z^{d+1} / (1 - q z), deg Q <= d",
    },
    Anchor { id: "stickelberger-element", statement: "sum_{i=0}^{d} F^{d-i} gamma_i, Q(z) = sum_i gamma_i z^i" },
    Anchor {
        id: "higher-stickelberger",
        statement: "Theta_n = sum_{i=0}^{nd} F^{nd-i} sum_{g monic, deg g = i, (g, I) = 1} phi(g, n) [g]",
    },
    Anchor {
        id: "carlitz-torsion",
        statement: "phi_t = tau + t; phi_I(X) = prod_{g | I} Psi_g(X); deg Psi_I = |(A/I)^x|",
    },
    Anchor {
        id: "hecke-counts",
        statement:
            "d(J_1, ..., J_n) = #{N in A^n : A^n/N = A/J_1 + ... + A/J_n}; phi(g, n) = sum_{prod J_k = (g)} d(J)",
    },
    Anchor { id: "newton", statement: "sum_{j=0}^{n} (-1)^j q_x^{j(j-1)/2} T^x(r-j) sigma^x_j = 0 for r >= 1" },
    Anchor { id: "hecke-product", statement: "T(J) T(J') = T(J_1 J'_1, ..., J_n J'_n) for coprime J, J'" },
    Anchor {
        id: "split-example",
        statement: "1/p = sum_j m_j/(t - a_j); u = sum_j m_j (delta_j (x) 1)(1 (x) delta_j)^{-1} - 1",
    },
    Anchor {
        id: "phi-table",
        statement: "phi(t-a,2) = q+1, phi((t-a)^2,2) = q^2+q+1, phi((t-a)(t-b),2) = q^2+2q+1, phi(P_2,2) = q^2+1",
    },
    Anchor {
        id: "norm-grouping",
        statement: "I = t(t-1): Theta_2 = (F + N_1)(F + q N_1) + (q^2+1) N, N_1 = sum_{a != 0,1} [t-a]",
    },
    Anchor {
        id: "no-infinity",
        statement:
            "Theta'_n = sum_{i=0}^{nd} (F^i + ... + F + 1) c_{nd-i}; at F = 1, n = 2 the weights are 1, 2, ..., 2d+1",
    },
];

pub fn anchor(id: &str) -> Anchor {
    *ANCHORS.iter().find(|a| a.id == id).unwrap_or_else(|| panic!("unknown anchor {id}"))
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub check_id: String,
    pub anchor: Anchor,
    pub status: CheckStatus,
    /// First counterexample datum when failing, else null.
    pub witness: Value,
    pub timing_ms: u64,
}

impl CheckRecord {
    pub fn new(check_id: impl Into<String>, anchor_id: &str, passed: bool, witness: Value) -> Self {
        CheckRecord {
            check_id: check_id.into(),
            anchor: anchor(anchor_id),
            status: if passed { CheckStatus::Pass } else { CheckStatus::Fail },
            witness: if passed { Value::Null } else { witness },
            timing_ms: 0,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }

    pub fn with_timing(mut self, ms: u64) -> Self {
        self.timing_ms = ms;
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn anchors_are_unique() {
        let mut ids: Vec<_> = ANCHORS.iter().map(|a| a.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), ANCHORS.len());
    }

    #[test]
    fn passing_record_drops_witness() {
        let r = CheckRecord::new("x", "newton", true, serde_json::json!({"a": 1}));
        assert!(r.witness.is_null());
        assert!(r.passed());
    }
}
