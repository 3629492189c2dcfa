use std::collections::BTreeSet;

use serde_json::json;

use eulerian_gamma::engine::{VerificationReport, REGISTRY};
use eulerian_gamma::{GammaExpansion, MPoly, Permutation, RixFactorization, StatisticBundle, Var};

use crate::{Family, Format};

fn set(xs: &[usize]) -> String {
    let inner: Vec<String> = xs.iter().map(ToString::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

fn stat_rows(s: &StatisticBundle) -> Vec<(&'static str, String)> {
    vec![
        ("exc", s.exc.to_string()),
        ("fix", s.fix.to_string()),
        ("fix_set", set(&s.fix_set)),
        ("maj", s.maj.to_string()),
        ("des", s.des.to_string()),
        ("des_set", set(&s.des_set)),
        ("inv", s.inv.to_string()),
        ("imaj", s.imaj.to_string()),
        ("ai", s.ai.to_string()),
        ("aid", s.aid.to_string()),
        ("rix", s.rix.to_string()),
        ("rix_set", set(&s.rix_set)),
        ("cyc", s.cyc.to_string()),
        ("cda", s.cda.to_string()),
        ("dd", s.dd.to_string()),
        ("da", s.da.to_string()),
        ("peak", s.peak.to_string()),
        ("valley", s.valley.to_string()),
        ("lyc", s.lyc.to_string()),
    ]
}

pub fn stats(s: &StatisticBundle, format: Format) {
    match format {
        Format::Json => println!("{}", serde_json::to_string(s).expect("serializable")),
        Format::Tsv => {
            let rows = stat_rows(s);
            println!("{}", rows.iter().map(|r| r.0).collect::<Vec<_>>().join("\t"));
            println!("{}", rows.iter().map(|r| r.1.as_str()).collect::<Vec<_>>().join("\t"));
        }
        Format::Text => {
            for (k, v) in stat_rows(s) {
                println!("{k}: {v}");
            }
        }
    }
}

pub fn gamma(family: Family, n: usize, g: &GammaExpansion, format: Format) {
    let label = match family {
        Family::Derangement | Family::Sw3 => "gamma~",
        Family::Basic | Family::Cyc => "gamma",
    };
    match format {
        Format::Json => {
            let gammas: Vec<String> = g.gammas.iter().map(ToString::to_string).collect();
            let family = format!("{family:?}").to_lowercase();
            println!("{}", json!({ "family": family, "n": n, "center": g.center, "gammas": gammas }));
        }
        Format::Tsv => {
            println!("k\t{label}");
            for (k, c) in g.gammas.iter().enumerate() {
                println!("{k}\t{c}");
            }
        }
        Format::Text => {
            for (k, c) in g.gammas.iter().enumerate() {
                println!("k={k}  {label}={c}");
            }
        }
    }
}

pub fn poly(p: &MPoly, group_by_t: bool, format: Format) {
    let shown = if group_by_t { p.display_grouped(Var::T) } else { p.to_string() };
    match format {
        Format::Json => println!("{}", json!({ "poly": shown })),
        Format::Tsv | Format::Text => println!("{shown}"),
    }
}

pub fn reports(reports: &[VerificationReport], format: Format) {
    match format {
        Format::Json => {
            for r in reports {
                println!("{}", serde_json::to_string(r).expect("serializable"));
            }
        }
        Format::Tsv => {
            println!("check_id\tn_lo\tn_hi\tpassed\twitnesses\telapsed_ms");
            for r in reports {
                let [lo, hi] = r.n_range;
                println!("{}\t{lo}\t{hi}\t{}\t{}\t{}", r.check_id, r.passed, r.witnesses.len(), r.elapsed_ms);
            }
        }
        Format::Text => {
            for r in reports {
                let [lo, hi] = r.n_range;
                let verdict = if r.passed { "PASS" } else { "FAIL" };
                println!("{verdict} {} n={lo}..{hi} ({} ms)", r.check_id, r.elapsed_ms);
                for w in &r.witnesses {
                    println!("    {w}");
                }
                if let Some(note) = &r.note {
                    println!("    note: {note}");
                }
            }
        }
    }
}

pub fn checks(format: Format) {
    for c in REGISTRY {
        match format {
            Format::Json => println!("{}", json!({ "check_id": c.id, "summary": c.summary })),
            Format::Tsv => println!("{}\t{}", c.id, c.summary),
            Format::Text => println!("{:<20} {}", c.id, c.summary),
        }
    }
}

pub fn mapped(input: &Permutation, map: &str, image: &str, format: Format) {
    match format {
        Format::Json => println!("{}", json!({ "map": map, "input": input.to_string(), "output": image })),
        Format::Tsv => println!("{input}\t{image}"),
        Format::Text => println!("{image}"),
    }
}

pub fn orbit(o: &BTreeSet<Permutation>, format: Format) {
    match format {
        Format::Json => {
            let items: Vec<String> = o.iter().map(ToString::to_string).collect();
            println!("{}", json!(items));
        }
        Format::Tsv | Format::Text => {
            for p in o {
                println!("{p}");
            }
        }
    }
}

pub fn rixfact(f: &RixFactorization, format: Format) {
    match format {
        Format::Json => println!("{}", serde_json::to_string(f).expect("serializable")),
        Format::Tsv => {
            let factors: Vec<String> =
                f.factors().map(|x| x.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")).collect();
            println!("{}\t{:?}\t{}\t{}", factors.join("|"), f.beta_kind, f.beta1, set(&f.rix_set));
        }
        Format::Text => println!("{f}"),
    }
}
