use super::BasisFamily;
use crate::error::{Error, Result};
use crate::lie::Tree;
use crate::words::Alphabet;

const BUNDLED: &[(&str, &str)] = &[
    ("xyz2-config", include_str!("../../data/xyz2_config.tsv")),
    ("xyz2-classical", include_str!("../../data/xyz2_classical.tsv")),
    ("xyz2-comparison", include_str!("../../data/xyz2_comparison.tsv")),
];

/// Names accepted by [`load_fixture`].
pub fn fixture_names() -> impl Iterator<Item = &'static str> {
    BUNDLED.iter().map(|(n, _)| *n)
}

/// A bundled fixture basis by name.
pub fn load_fixture(name: &str) -> Result<BasisFamily> {
    let (_, text) = BUNDLED
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::UnknownFixture(name.to_string()))?;
    parse_fixture(name, text)
}

/// Parses a fixture: `#` comment lines, one `# alphabet: a,b,…` line before
/// any record, then `word<TAB>tree` records. Each tree's leaves must be a
/// rearrangement of its word.
pub fn parse_fixture(name: &str, text: &str) -> Result<BasisFamily> {
    let err = |line: usize, msg: String| Error::Fixture {
        name: name.to_string(),
        line,
        msg,
    };
    let mut alphabet: Option<Alphabet> = None;
    let mut members = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let s = raw.trim_end();
        if s.is_empty() {
            continue;
        }
        if let Some(comment) = s.strip_prefix('#') {
            if let Some(spec) = comment.trim().strip_prefix("alphabet:") {
                if alphabet.is_some() {
                    return Err(err(line, "second alphabet line".into()));
                }
                alphabet = Some(Alphabet::parse(spec.trim()).map_err(|e| err(line, e.to_string()))?);
            }
            continue;
        }
        let a = alphabet
            .as_ref()
            .ok_or_else(|| err(line, "record before the alphabet line".into()))?;
        let (word, tree) = s
            .split_once('\t')
            .ok_or_else(|| err(line, "expected word<TAB>tree".into()))?;
        let w = a.parse_word(word.trim()).map_err(|e| err(line, e.to_string()))?;
        let t = Tree::parse(a, tree.trim()).map_err(|e| err(line, e.to_string()))?;
        let mut got = t.leaves();
        got.sort();
        let mut want = w.to_vec();
        want.sort();
        if got != want {
            return Err(err(line, "tree leaves do not rearrange the word".into()));
        }
        members.push((w, t));
    }
    let a = alphabet.ok_or_else(|| err(0, "missing alphabet line".into()))?;
    Ok(BasisFamily::fixture(name, a, members))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(name: &str, i: usize) -> String {
        let f = load_fixture(name).unwrap();
        let (_, t) = &f.members()[i - 1];
        t.display(f.alphabet()).to_string()
    }

    #[test]
    fn bundled_rows() {
        for n in fixture_names() {
            assert_eq!(load_fixture(n).unwrap().len(), 14);
        }
        assert_eq!(row("xyz2-comparison", 11), "[[[[x,y],y],z],[x,z]]");
        assert_eq!(row("xyz2-classical", 1), "[x,[x,[y,[[y,z],z]]]]");
        assert_eq!(row("xyz2-config", 14), "[[[[z,x],y],y],[z,x]]");
        assert!(matches!(load_fixture("nope"), Err(Error::UnknownFixture(_))));
    }

    #[test]
    fn bundled_generated_columns_match_the_generators() {
        use crate::basis::BasisFamily;
        use crate::words::{MultiDegree, WordSet};
        let md = MultiDegree::new(vec![2, 2, 2]).unwrap();
        let cfg = load_fixture("xyz2-config").unwrap();
        let a = cfg.alphabet().clone();
        assert_eq!(cfg.members(), BasisFamily::config(&a, WordSet::Lyndon, &md).members());
        let cls = load_fixture("xyz2-classical").unwrap();
        assert_eq!(cls.members(), BasisFamily::classical(&a, &md).members());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse_fixture("t", "# alphabet: x,y\nxy\t[x,y]\nxy\t[x,\n").unwrap_err();
        assert!(matches!(e, Error::Fixture { line: 3, .. }), "{e}");
        let e = parse_fixture("t", "xy\t[x,y]\n").unwrap_err();
        assert!(matches!(e, Error::Fixture { line: 1, .. }));
        let e = parse_fixture("t", "# alphabet: x,y\n\nxy [x,y]\n").unwrap_err();
        assert!(matches!(e, Error::Fixture { line: 3, .. }));
        let e = parse_fixture("t", "# alphabet: x,y\nxy\t[x,x]\n").unwrap_err();
        assert!(matches!(e, Error::Fixture { line: 2, .. }));
        assert!(parse_fixture("t", "# nothing\n").is_err());
    }
}
