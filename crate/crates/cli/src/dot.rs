use std::collections::BTreeMap;
use std::fmt::Write;

use priestley::Poset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum DotTarget {
    /// Every strict pair `a < b`.
    Order,
    /// Cover pairs only.
    Hasse,
}

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

/// Graphviz text drawn bottom-up, one `rank=same` group per height.
pub fn to_dot(p: &Poset, target: DotTarget) -> String {
    let mut out = String::from("digraph poset {\n    rankdir=BT;\n    node [shape=circle];\n");
    for i in 0..p.size() {
        writeln!(out, "    n{i} [label={}];", quote(p.label(i))).unwrap();
    }
    let mut ranks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, h) in p.heights().into_iter().enumerate() {
        ranks.entry(h).or_default().push(i);
    }
    for members in ranks.values() {
        let names: Vec<String> = members.iter().map(|i| format!("n{i};")).collect();
        writeln!(out, "    {{ rank=same; {} }}", names.join(" ")).unwrap();
    }
    let edges = match target {
        DotTarget::Order => p.strict_pairs(),
        DotTarget::Hasse => p.covers(),
    };
    for (i, j) in edges {
        writeln!(out, "    n{i} -> n{j};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use priestley::Limits;

    fn edges(s: &str) -> usize {
        s.matches("->").count()
    }

    #[test]
    fn edge_counts() {
        assert_eq!(edges(&to_dot(&Poset::chain(3), DotTarget::Hasse)), 2);
        assert_eq!(edges(&to_dot(&Poset::chain(3), DotTarget::Order)), 3);
        let cube2 = Poset::cube(2, &Limits::default()).unwrap();
        assert_eq!(edges(&to_dot(&cube2, DotTarget::Hasse)), 4);
        assert_eq!(edges(&to_dot(&Poset::antichain(2), DotTarget::Hasse)), 0);
    }

    #[test]
    fn layout_and_escaping() {
        let p = Poset::chain(2).with_labels(vec!["a\"b".into(), "c".into()]).unwrap();
        let dot = to_dot(&p, DotTarget::Hasse);
        assert!(dot.contains("rankdir=BT;"));
        assert!(dot.contains(r#"n0 [label="a\"b"];"#));
        assert!(dot.contains("{ rank=same; n0; }"));
        assert!(dot.contains("{ rank=same; n1; }"));
        assert!(dot.ends_with("    n0 -> n1;\n}\n"));
    }
}
