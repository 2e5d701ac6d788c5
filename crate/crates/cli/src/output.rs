//! Rendering to text, JSON, and CSV.
//!
//! JSON mirrors the library types field for field; CSV is flat with one
//! record per row. Both are byte-stable for a given input and version:
//! integers in plain decimal, fields in fixed order, `\n` line endings.
//! Multi-valued CSV cells (generator lists, multiple family matches)
//! are joined with spaces and semicolons respectively, so no quoting is
//! ever needed.

use persemi_core::families::{FamilyId, FamilyMatch, StructureCheck};
use persemi_core::permblock::PermutationReport;
use persemi_core::search::{ConjectureReport, EnumerationResult};
use persemi_core::{GeneratorSet, Semigroup};
use serde::Serialize;

use crate::Format;

fn join<T: ToString>(values: &[T], separator: &str) -> String {
    values
        .iter()
        .map(T::to_string)
        .collect::<Vec<_>>()
        .join(separator)
}

fn emit_json<T: Serialize>(view: &T) {
    println!(
        "{}",
        serde_json::to_string(view).expect("view serialization cannot fail")
    );
}

#[derive(Serialize)]
struct BlockView {
    index: usize,
    entries: Vec<i64>,
    residues: Vec<i64>,
}

#[derive(Serialize)]
struct CheckView {
    generators: Vec<i64>,
    n: i64,
    verdict: bool,
    generated_by_prefix: bool,
    blocks_checked: usize,
    horizon_index: usize,
    first_failure: Option<BlockView>,
}

pub fn render_check(semigroup: &Semigroup, report: &PermutationReport, format: Format) {
    let view = CheckView {
        generators: semigroup.generators().as_slice().to_vec(),
        n: report.n,
        verdict: report.verdict,
        generated_by_prefix: report.generated_by_prefix,
        blocks_checked: report.blocks_checked,
        horizon_index: report.horizon_index,
        first_failure: report.first_failure.as_ref().map(|b| BlockView {
            index: b.index,
            entries: b.entries.clone(),
            residues: b.residues.clone(),
        }),
    };
    match format {
        Format::Json => emit_json(&view),
        Format::Csv => {
            println!("n,verdict,generated_by_prefix,blocks_checked,horizon_index,failure_block,failure_entries");
            let (block, entries) = match &view.first_failure {
                Some(b) => (b.index.to_string(), join(&b.entries, " ")),
                None => (String::new(), String::new()),
            };
            println!(
                "{},{},{},{},{},{},{}",
                view.n,
                view.verdict,
                view.generated_by_prefix,
                view.blocks_checked,
                view.horizon_index,
                block,
                entries
            );
        }
        Format::Text => {
            println!("generators: {}", join(&view.generators, ","));
            println!("generated by prefix: {}", view.generated_by_prefix);
            println!(
                "blocks checked: {} (elements examined: {})",
                view.blocks_checked, view.horizon_index
            );
            if let Some(failure) = &view.first_failure {
                println!(
                    "first failure: block {} entries {} residues {}",
                    failure.index,
                    join(&failure.entries, ","),
                    join(&failure.residues, ",")
                );
            }
            println!(
                "{}-permutation semigroup: {}",
                view.n,
                if view.verdict { "yes" } else { "no" }
            );
        }
    }
}

#[derive(Serialize)]
struct InfoView {
    generators: Vec<i64>,
    multiplicity: i64,
    frobenius: i64,
    apery_modulus: i64,
    apery: Vec<i64>,
    elements: Vec<i64>,
}

pub fn render_info(semigroup: &Semigroup, format: Format) {
    let mut elements = vec![0];
    elements.extend(semigroup.positive_elements().take(29));
    let view = InfoView {
        generators: semigroup.generators().as_slice().to_vec(),
        multiplicity: semigroup.multiplicity(),
        frobenius: semigroup.frobenius(),
        apery_modulus: semigroup.apery().modulus(),
        apery: semigroup.apery().values(),
        elements,
    };
    match format {
        Format::Json => emit_json(&view),
        Format::Csv => {
            println!("generators,multiplicity,frobenius,apery,elements");
            println!(
                "{},{},{},{},{}",
                join(&view.generators, " "),
                view.multiplicity,
                view.frobenius,
                join(&view.apery, " "),
                join(&view.elements, " ")
            );
        }
        Format::Text => {
            println!("generators: {}", join(&view.generators, ","));
            println!("multiplicity: {}", view.multiplicity);
            println!("frobenius: {}", view.frobenius);
            println!(
                "apery set (mod {}): {}",
                view.apery_modulus,
                join(&view.apery, ",")
            );
            println!("elements: {}", join(&view.elements, ","));
        }
    }
}

#[derive(Serialize)]
struct QueryView {
    block_size: i64,
    min_g1: i64,
    max_gk: i64,
}

#[derive(Serialize)]
struct EnumerationView {
    query: QueryView,
    found: Vec<Vec<i64>>,
    candidates_examined: u64,
}

pub fn render_enumeration(result: &EnumerationResult, format: Format) {
    match format {
        Format::Json => {
            let view = EnumerationView {
                query: QueryView {
                    block_size: result.query.block_size,
                    min_g1: result.query.min_g1,
                    max_gk: result.query.max_gk,
                },
                found: result.found.iter().map(|g| g.as_slice().to_vec()).collect(),
                candidates_examined: result.candidates_examined,
            };
            emit_json(&view);
        }
        Format::Csv => {
            let header: Vec<String> = (1..=result.query.block_size)
                .map(|j| format!("g{j}"))
                .collect();
            println!("{}", header.join(","));
            for found in &result.found {
                println!("{}", join(found.as_slice(), ","));
            }
        }
        Format::Text => {
            for found in &result.found {
                println!("{}", join(found.as_slice(), ","));
            }
        }
    }
}

#[derive(Serialize)]
struct FamilyGenView {
    family: String,
    k: i64,
    generators: Vec<i64>,
}

pub fn render_family_gen(id: FamilyId, k: i64, generators: &GeneratorSet, format: Format) {
    match format {
        Format::Json => emit_json(&FamilyGenView {
            family: id.to_string(),
            k,
            generators: generators.as_slice().to_vec(),
        }),
        Format::Csv => {
            println!("family,k,generators");
            println!("{id},{k},{}", join(generators.as_slice(), " "));
        }
        Format::Text => println!("{}", join(generators.as_slice(), ",")),
    }
}

#[derive(Serialize)]
struct VerifyRowView {
    family: String,
    k: i64,
    ok: bool,
    bound: i64,
    first_mismatch: Option<i64>,
}

pub fn render_verify(checks: &[StructureCheck], format: Format) {
    let rows: Vec<VerifyRowView> = checks
        .iter()
        .map(|c| VerifyRowView {
            family: c.family.to_string(),
            k: c.k,
            ok: c.passed(),
            bound: c.bound,
            first_mismatch: c.mismatch.map(|m| m.value),
        })
        .collect();
    match format {
        Format::Json => emit_json(&rows),
        Format::Csv => {
            println!("family,k,ok,bound,first_mismatch");
            for row in &rows {
                println!(
                    "{},{},{},{},{}",
                    row.family,
                    row.k,
                    row.ok,
                    row.bound,
                    row.first_mismatch.map_or(String::new(), |v| v.to_string())
                );
            }
        }
        Format::Text => {
            for row in &rows {
                match row.first_mismatch {
                    None => println!(
                        "{} k={}: ok (checked up to {})",
                        row.family, row.k, row.bound
                    ),
                    Some(value) => println!(
                        "{} k={}: MISMATCH at {} (checked up to {})",
                        row.family, row.k, value, row.bound
                    ),
                }
            }
        }
    }
}

#[derive(Serialize)]
struct FamilyKView {
    family: String,
    k: i64,
}

#[derive(Serialize)]
struct MatchView {
    generators: Vec<i64>,
    matches: Vec<FamilyKView>,
}

pub fn render_match(generators: &GeneratorSet, matches: &FamilyMatch, format: Format) {
    match format {
        Format::Json => emit_json(&MatchView {
            generators: generators.as_slice().to_vec(),
            matches: matches
                .matches
                .iter()
                .map(|&(id, k)| FamilyKView {
                    family: id.to_string(),
                    k,
                })
                .collect(),
        }),
        Format::Csv => {
            println!("family,k");
            for &(id, k) in &matches.matches {
                println!("{id},{k}");
            }
        }
        Format::Text => {
            for &(id, k) in &matches.matches {
                println!("{id} k={k}");
            }
        }
    }
}

#[derive(Serialize)]
struct MembersView {
    family: String,
    k: i64,
    bound: i64,
    members: Vec<i64>,
}

pub fn render_members(id: FamilyId, k: i64, bound: i64, members: &[i64], format: Format) {
    match format {
        Format::Json => emit_json(&MembersView {
            family: id.to_string(),
            k,
            bound,
            members: members.to_vec(),
        }),
        Format::Csv => {
            println!("member");
            for x in members {
                println!("{x}");
            }
        }
        Format::Text => println!("{}", join(members, ",")),
    }
}

#[derive(Serialize)]
struct ConjectureRowView {
    multiplicity: i64,
    generators: Vec<i64>,
    matches: Vec<FamilyKView>,
    confirmed: bool,
}

#[derive(Serialize)]
struct ConjectureView {
    m_min: i64,
    m_max: i64,
    below_conjecture_floor: bool,
    rows: Vec<ConjectureRowView>,
    unmatched: Vec<Vec<i64>>,
}

pub fn render_conjecture(report: &ConjectureReport, format: Format) {
    let view = ConjectureView {
        m_min: report.m_min,
        m_max: report.m_max,
        below_conjecture_floor: report.below_conjecture_floor,
        rows: report
            .rows
            .iter()
            .map(|row| ConjectureRowView {
                multiplicity: row.multiplicity,
                generators: row.generators.as_slice().to_vec(),
                matches: row
                    .matches
                    .iter()
                    .map(|&(id, k)| FamilyKView {
                        family: id.to_string(),
                        k,
                    })
                    .collect(),
                confirmed: row.confirmed(),
            })
            .collect(),
        unmatched: report
            .unmatched
            .iter()
            .map(|g| g.as_slice().to_vec())
            .collect(),
    };
    match format {
        Format::Json => emit_json(&view),
        Format::Csv => {
            println!("multiplicity,generators,family,k,confirmed");
            for row in &view.rows {
                let families = row
                    .matches
                    .iter()
                    .map(|m| m.family.clone())
                    .collect::<Vec<_>>()
                    .join(";");
                let ks = row
                    .matches
                    .iter()
                    .map(|m| m.k.to_string())
                    .collect::<Vec<_>>()
                    .join(";");
                println!(
                    "{},{},{},{},{}",
                    row.multiplicity,
                    join(&row.generators, " "),
                    families,
                    ks,
                    row.confirmed
                );
            }
        }
        Format::Text => {
            for row in &view.rows {
                let label = if row.matches.is_empty() {
                    "(no family)".to_string()
                } else {
                    row.matches
                        .iter()
                        .map(|m| format!("{} k={}", m.family, m.k))
                        .collect::<Vec<_>>()
                        .join(", ")
                };
                println!(
                    "m={} {}: {}",
                    row.multiplicity,
                    join(&row.generators, ","),
                    label
                );
            }
            if view.unmatched.is_empty() {
                println!("unmatched: none");
            } else {
                println!("unmatched: {}", view.unmatched.len());
            }
        }
    }
}
