//! One row per sphere dimension: the least source rank admitting a
//! reduction, or why there is none.

use std::io::Write;

use gstruct_core::classify::{min_source_rank, Case};
use gstruct_core::{GroupDescriptor, GroupFamily};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AtlasRow {
    pub n: u64,
    pub target: String,
    pub source: String,
    pub case: String,
    /// `ok`, `none`, `no-case`, `even-dimension`, `residue-mismatch`, or
    /// `out-of-domain:<hypothesis>`.
    pub status: String,
    pub min_k: Option<u64>,
    pub m: Option<u64>,
    pub d: Option<u64>,
    /// The divisor `m` is checked against at `min_k`.
    pub modulus: String,
}

pub fn row(target: GroupFamily, n: u64, source: GroupFamily) -> AtlasRow {
    let g = GroupDescriptor { family: target, size: n };
    let case = Case::for_pair(target, source);
    let mut r = AtlasRow {
        n,
        target: g.to_string(),
        source: source.as_str().into(),
        case: case.map(|c| c.as_str().to_string()).unwrap_or_default(),
        status: String::new(),
        min_k: None,
        m: None,
        d: None,
        modulus: String::new(),
    };
    let min = match min_source_rank(&g, source) {
        Ok(min) => min,
        Err(e) => {
            r.status = format!("out-of-domain:{}", e.hypothesis());
            return r;
        }
    };
    let Some(case) = case else {
        r.status = "no-case".into();
        return r;
    };
    if target != GroupFamily::Sp && n.is_multiple_of(2) {
        r.status = "even-dimension".into();
        return r;
    }
    let d = case.d();
    if !(n + 1).is_multiple_of(d) {
        r.status = "residue-mismatch".into();
        return r;
    }
    let m = (n + 1) / d;
    r.m = Some(m);
    r.d = Some(d);
    match min {
        Some(k) => {
            r.status = "ok".into();
            r.min_k = Some(k);
            r.modulus = case.modulus(m - k).factor_string();
        }
        None => r.status = "none".into(),
    }
    r
}

pub fn rows(target: GroupFamily, range: std::ops::RangeInclusive<u64>, source: GroupFamily) -> Vec<AtlasRow> {
    range.map(|n| row(target, n, source)).collect()
}

pub fn write_csv<W: Write>(out: W, rows: &[AtlasRow]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn so15_row() {
        let r = row(GroupFamily::SO, 15, GroupFamily::SO);
        assert_eq!((r.status.as_str(), r.min_k, r.m, r.modulus.as_str()), ("ok", Some(7), Some(16), "2^4"));
    }

    #[test]
    fn statuses() {
        assert_eq!(row(GroupFamily::SO, 7, GroupFamily::SO).status, "out-of-domain:sphere-dimension>=8");
        assert_eq!(row(GroupFamily::SO, 16, GroupFamily::SO).status, "even-dimension");
        assert_eq!(row(GroupFamily::SO, 13, GroupFamily::Sp).status, "residue-mismatch");
        assert_eq!(row(GroupFamily::Sp, 13, GroupFamily::SO).status, "no-case");
    }

    #[test]
    fn csv_header_and_row() {
        let mut buf = Vec::new();
        write_csv(&mut buf, &rows(GroupFamily::SU, 11..=11, GroupFamily::SU)).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text, "n,target,source,case,status,min_k,m,d,modulus\n11,SU(11),SU,D,ok,10,12,1,2\n");
    }
}
