use hankel_blowup::clique::{CliqueSet, ColonData};
use hankel_blowup::resolution::{render_label, BettiTable};
use serde_json::Value;

pub fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

pub fn cliques_text(set: &CliqueSet, colons: &[ColonData]) -> String {
    let vars = set.graph.vars();
    let p = set.graph.original();
    let mut s = format!("# {} maximal cliques for {p}, {} order\n", set.len(), set.kind);
    for (t, (f, c)) in set.cliques.iter().zip(colons).enumerate() {
        let members: Vec<String> = f.members.iter().map(ToString::to_string).collect();
        s += &format!("F{t}: {}\n", members.join(" > "));
        if !f.moving.is_empty() {
            let mv: Vec<String> = f.moving.iter().map(ToString::to_string).collect();
            s += &format!("  moving     ({})\n", mv.join(","));
        }
        let gens: Vec<String> = c.minimal_generators.iter().map(|&g| render_label(vars, g)).collect();
        s += &format!("  colon      <{}>  codim {}\n", gens.join(", "), c.codim);
        if let Some(tail) = &c.tail {
            let canceled = if c.minimal_generators.contains(&tail.monomial) { "" } else { " (canceled)" };
            s += &format!("  tail       {}{canceled}\n", render_label(vars, tail.monomial));
        }
        s += &format!("  essential  {}\n", render_label(vars, c.essential));
    }
    s
}

/// Betti table in the usual layout: columns are homological degrees, rows
/// are `j - i`.
pub fn betti_text(b: &BettiTable) -> String {
    let lo = b.entries.iter().filter(|(_, &v)| v > 0).map(|(&(i, j), _)| j - i).min().unwrap_or(0);
    let (pd, reg) = (b.pd(), b.reg());
    let totals = b.totals();
    let width = totals.iter().map(|t| t.to_string().len()).max().unwrap_or(1).max(pd.to_string().len()) + 1;
    let label = 7.max(reg.to_string().len() + 2);
    let mut s = format!("{:>label$}", "");
    for i in 0..=pd {
        s += &format!("{i:>width$}");
    }
    s += &format!("\n{:>label$}", "total:");
    for t in &totals {
        s += &format!("{t:>width$}");
    }
    s.push('\n');
    for k in lo..=reg {
        s += &format!("{:>label$}", format!("{k}:"));
        for i in 0..=pd {
            let v = b.get(i, i + k);
            let cell = if v == 0 { ".".to_string() } else { v.to_string() };
            s += &format!("{cell:>width$}");
        }
        s.push('\n');
    }
    s
}
