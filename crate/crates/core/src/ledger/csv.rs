use super::Certificate;

pub const CERTIFICATE_HEADER: &str = "id,n,hyp_status,lhs,rhs,slack,verdict,witness_available";

/// 17 significant digits; `NaN` for values that were not computed.
pub(crate) fn float(v: f64) -> String {
    if v.is_nan() {
        "NaN".to_string()
    } else {
        format!("{v:.16e}")
    }
}

impl Certificate {
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.id,
            self.n,
            self.hyp_status(),
            float(self.lhs),
            float(self.rhs),
            float(self.slack),
            self.verdict.as_str(),
            self.witness.is_some()
        )
    }
}

/// Header plus one LF-terminated row per certificate.
pub fn certificates_csv(certs: &[Certificate]) -> String {
    let mut out = String::from(CERTIFICATE_HEADER);
    out.push('\n');
    for c in certs {
        out.push_str(&c.csv_row());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ledger::{evaluate, InequalityId, ParamSet};
    use crate::ComplexMatrix;

    #[test]
    fn row_layout() {
        let cert = evaluate(InequalityId::RealPartConvexity, &ComplexMatrix::identity(2), &ParamSet::default()).unwrap();
        let csv = certificates_csv(&[cert]);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some(CERTIFICATE_HEADER));
        let row: Vec<&str> = lines.next().unwrap().split(',').collect();
        assert_eq!(row[0], "I-2.13");
        assert_eq!(row[2], "not_required");
        assert_eq!(row[3], "1.0000000000000000e0");
        assert_eq!(row[6], "verified");
        assert!(csv.ends_with('\n') && !csv.contains('\r'));
        assert_eq!(float(f64::NAN), "NaN");
        let v = 0.1 + 0.2;
        assert_eq!(float(v).parse::<f64>().unwrap(), v);
    }
}
