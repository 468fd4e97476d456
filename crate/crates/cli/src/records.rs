//! Line format for character records.
//!
//! One record per line as whitespace-separated `key=value` tokens. Keys may
//! come in any order; rendering always uses the canonical order
//!
//! ```text
//! series= n= label= omega= sigma_inv= rho_field= hc= fs=
//! ```
//!
//! `#` starts a comment running to the end of the line. Unknown data is
//! spelled `unknown`. Classified output appends `ext_field=` and `rule=`
//! tokens; the parser skips those two keys so its own output loads back.
//! Files must be 7-bit ASCII.

use std::fmt;

use uch_core::classify::ClassificationResult;
use uch_core::field::FieldDesc;
use uch_core::groups::{parse_label, FsIndicator, HcTag, Series, UnipotentCharRecord};

/// Parse failure with its 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoadError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for LoadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for LoadError {}

/// Parses a whole record file. Blank lines and comments are skipped.
pub fn parse_records(text: &str) -> Result<Vec<UnipotentCharRecord>, LoadError> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let fail = |message: String| LoadError { line, message };
        if !raw.is_ascii() {
            return Err(fail(String::from("record files must be 7-bit ASCII")));
        }
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        out.push(parse_record_tokens(content).map_err(fail)?);
    }
    Ok(out)
}

fn parse_record_tokens(content: &str) -> Result<UnipotentCharRecord, String> {
    let mut pairs: Vec<(&str, &str)> = Vec::new();
    for token in content.split_whitespace() {
        let (key, value) = token
            .split_once('=')
            .ok_or_else(|| format!("token '{token}' is not key=value"))?;
        if matches!(key, "ext_field" | "rule") {
            continue;
        }
        if pairs.iter().any(|(k, _)| *k == key) {
            return Err(format!("duplicate key '{key}'"));
        }
        if !matches!(
            key,
            "series" | "n" | "label" | "omega" | "sigma_inv" | "rho_field" | "hc" | "fs"
        ) {
            return Err(format!("unknown key '{key}'"));
        }
        pairs.push((key, value));
    }
    let get = |key: &str| pairs.iter().find(|(k, _)| *k == key).map(|(_, v)| *v);
    let series_raw = get("series").ok_or("missing key 'series'")?;
    let series = Series::from_tag(series_raw).map_err(|e| e.to_string())?;
    let n: u32 = get("n")
        .ok_or("missing key 'n'")?
        .parse()
        .map_err(|_| format!("invalid rank '{}'", get("n").unwrap()))?;
    let label_raw = get("label").ok_or("missing key 'label'")?;
    let label = parse_label(series, label_raw).map_err(|e| e.to_string())?;

    fn known<T>(
        value: Option<&str>,
        parse: impl Fn(&str) -> Result<T, String>,
    ) -> Result<Option<T>, String> {
        match value {
            None | Some("unknown") => Ok(None),
            Some(v) => parse(v).map(Some),
        }
    }
    let omega = known(get("omega"), |v| {
        v.parse().map_err(|e: uch_core::Error| e.to_string())
    })?;
    let sigma_invariant = known(get("sigma_inv"), |v| match v {
        "true" => Ok(true),
        "false" => Ok(false),
        _ => Err(format!("invalid sigma_inv value '{v}'")),
    })?;
    let rho_field = known(get("rho_field"), |v| {
        v.parse::<FieldDesc>().map_err(|e| e.to_string())
    })?;
    let hc = known(get("hc"), |v| v.parse::<HcTag>().map_err(|e| e.to_string()))?;
    let fs = known(get("fs"), |v| {
        v.parse::<FsIndicator>().map_err(|e| e.to_string())
    })?;

    let record = UnipotentCharRecord {
        series,
        n,
        label,
        omega,
        sigma_invariant,
        rho_field,
        hc,
        fs,
        ext: None,
    };
    record.validate().map_err(|e| e.to_string())?;
    Ok(record)
}

fn unknown_or<T: fmt::Display>(v: &Option<T>) -> String {
    match v {
        Some(x) => x.to_string(),
        None => String::from("unknown"),
    }
}

/// Canonical record line, without classification columns.
pub fn render_record(r: &UnipotentCharRecord) -> String {
    let sigma = match r.sigma_invariant {
        Some(true) => "true",
        Some(false) => "false",
        None => "unknown",
    };
    format!(
        "series={} n={} label={} omega={} sigma_inv={} rho_field={} hc={} fs={}",
        r.series.tag(),
        r.n,
        r.label,
        unknown_or(&r.omega),
        sigma,
        unknown_or(&r.rho_field),
        unknown_or(&r.hc),
        unknown_or(&r.fs),
    )
}

/// Record line with the classification appended.
pub fn render_classified(r: &UnipotentCharRecord, c: &ClassificationResult) -> String {
    format!(
        "{} ext_field={} rule={}",
        render_record(r),
        c.reported(),
        c.rule
    )
}

/// Multi-line human-readable form.
pub fn render_text(r: &UnipotentCharRecord, c: Option<&ClassificationResult>) -> String {
    let sigma = match r.sigma_invariant {
        Some(true) => "true",
        Some(false) => "false",
        None => "unknown",
    };
    let mut out = format!(
        "series:      {}\nrank:        {}\nlabel:       {}\nomega:       {}\nsigma_inv:   {}\nrho_field:   {}\nhc:          {}\nfs:          {}",
        r.series.tag(),
        r.n,
        r.label,
        unknown_or(&r.omega),
        sigma,
        unknown_or(&r.rho_field),
        unknown_or(&r.hc),
        unknown_or(&r.fs),
    );
    if let Some(c) = c {
        out.push_str(&format!(
            "\next_field:   {}\nrule:        {}",
            c.reported(),
            c.rule
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use uch_core::field::FrobeniusEigenvalue;

    #[test]
    fn parse_canonical_line() {
        let text =
            "series=2A n=3 label=[2,1] omega=-1*q^3 sigma_inv=true rho_field=Q hc=[2,1] fs=-1";
        let records = parse_records(text).unwrap();
        assert_eq!(records.len(), 1);
        let r = &records[0];
        assert_eq!(r.series, Series::TwistedA);
        assert_eq!(r.n, 3);
        assert_eq!(
            r.omega,
            Some("-1*q^3".parse::<FrobeniusEigenvalue>().unwrap())
        );
        assert_eq!(r.sigma_invariant, Some(true));
        assert_eq!(r.fs, Some(FsIndicator::Minus));
        assert_eq!(render_record(r), text);
    }

    #[test]
    fn order_and_comments_are_free() {
        let text = "\n# header comment\nlabel=[2,1] n=3 series=2A  # trailing note\n";
        let records = parse_records(text).unwrap();
        assert_eq!(records.len(), 1);
        assert_eq!(records[0].omega, None);
        assert_eq!(
            render_record(&records[0]),
            "series=2A n=3 label=[2,1] omega=unknown sigma_inv=unknown rho_field=unknown hc=unknown fs=unknown"
        );
    }

    #[test]
    fn classified_output_loads_back() {
        let text = "series=2A n=3 label=[2,1] omega=-1*q^3 sigma_inv=true rho_field=Q hc=[2,1] fs=-1 ext_field=Q(sqrt(-q)) rule=Thm1";
        let records = parse_records(text).unwrap();
        assert_eq!(records.len(), 1);
        assert_eq!(records[0].ext, None);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let text = "series=A n=3 label=[2,1]\nseries=A n=3 label=[2,1] bogus=1";
        let err = parse_records(text).unwrap_err();
        assert_eq!(err.line, 2);
        assert!(err.message.contains("bogus"));

        let err = parse_records("series=A n=3 label=[2,1] n=4").unwrap_err();
        assert!(err.message.contains("duplicate"));

        let err = parse_records("series=A label=[2,1]").unwrap_err();
        assert!(err.message.contains("missing key 'n'"));

        let err = parse_records("series=Q8 n=3 label=[2,1]").unwrap_err();
        assert!(err.message.contains("unknown series"));

        // The label must match the declared rank.
        let err = parse_records("series=A n=4 label=[2,1]").unwrap_err();
        assert_eq!(err.line, 1);
    }

    #[test]
    fn non_ascii_rejected() {
        let err = parse_records("series=A n=3 label=[2,1] # caf\u{e9}").unwrap_err();
        assert!(err.message.contains("ASCII"));
    }
}
