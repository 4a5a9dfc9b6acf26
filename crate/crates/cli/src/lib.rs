//! `baxterlab` command-line front end: counting, listing, checking, tree
//! expansion, and the verification suite, over the baxter-core library.

use std::io::Write;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_traits::Zero;
use serde_json::json;

use baxter_core::enumerate::{
    brute_count_with_limit, for_each_member, rot90_fixed_perms, stats_table, CountMethod,
    CountTable, DEFAULT_BRUTE_LIMIT,
};
use baxter_core::gentree::{
    check_isomorphism, expand_rule, explicit_tree, GenTree, Rule, TreeFamily,
};
use baxter_core::insertion::{
    admissible_boundary_labels, admissible_largest_gaps, admissible_smallest_gaps,
    insert_boundary, insert_largest, insert_smallest, Side,
};
use baxter_core::pattern::{is_baxter, vincular_occurrences, VincularPattern};
use baxter_core::perm::{parse_perm, Permutation, Symmetry};
use baxter_core::{baxter_count, fpf_involution_count, quarter_turn_count, FamilySpec};

pub const BRUTE_LIMIT_ENV: &str = "BAXTERLAB_BRUTE_LIMIT";

#[derive(Parser)]
#[command(name = "baxterlab", version, about = "Exact Baxter permutation combinatorics", disable_help_subcommand = true)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Lines)]
    format: Format,
    /// Worker threads for brute-force scans
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Lines,
    Json,
    Csv,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    /// All Baxter permutations
    Baxter,
    /// Baxter permutations fixed under 180-degree rotation
    Half,
    /// Baxter permutations fixed under 90-degree rotation
    Quarter,
    /// Fixed-point-free self-inverse Baxter permutations
    FpfInvolution,
}

impl FamilyArg {
    fn spec(self) -> FamilySpec {
        match self {
            FamilyArg::Baxter => FamilySpec::baxter(),
            FamilyArg::Half => FamilySpec::baxter_fixed(Symmetry::Rotate180),
            FamilyArg::Quarter => FamilySpec::baxter_fixed(Symmetry::Rotate90Cw),
            FamilyArg::FpfInvolution => FamilySpec::fpf_involution_baxter(),
        }
    }

    fn name(self) -> &'static str {
        match self {
            FamilyArg::Baxter => "baxter",
            FamilyArg::Half => "half",
            FamilyArg::Quarter => "quarter",
            FamilyArg::FpfInvolution => "fpf-involution",
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Formula,
    Tree,
    Brute,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum RuleArg {
    Catalan,
    Baxter,
    HalfEven,
    HalfOdd,
    Quarter,
}

impl RuleArg {
    fn rule(self) -> Rule {
        match self {
            RuleArg::Catalan => Rule::Catalan,
            RuleArg::Baxter => Rule::Baxter,
            RuleArg::HalfEven => Rule::HalfEven,
            RuleArg::HalfOdd => Rule::HalfOdd,
            RuleArg::Quarter => Rule::Quarter,
        }
    }

    fn family(self) -> Option<TreeFamily> {
        match self {
            RuleArg::Catalan => None,
            RuleArg::Baxter => Some(TreeFamily::Baxter),
            RuleArg::HalfEven => Some(TreeFamily::HalfEven),
            RuleArg::HalfOdd => Some(TreeFamily::HalfOdd),
            RuleArg::Quarter => Some(TreeFamily::Quarter),
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    All,
    Rules,
    Isomorphism,
    Theorem,
    Formulas,
}

#[derive(Subcommand)]
enum Verb {
    /// Count family members of length n
    Count {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Formula)]
        method: MethodArg,
    },
    /// List family members of length n, one per line
    List {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
    },
    /// Test a permutation for the Baxter property
    Check {
        /// Permutation, compact (2413) or comma form (2,4,1,3)
        perm: String,
    },
    /// Expand a succession rule, or build the explicit tree
    Tree {
        #[arg(long, value_enum)]
        rule: RuleArg,
        #[arg(long)]
        depth: usize,
        /// Emit explicit tree nodes instead of rank sizes
        #[arg(long)]
        explicit: bool,
    },
    /// Run the invariant suites at a size bound
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
    },
    /// Joint (descents, inverse descents) distribution at length n
    Stats {
        #[arg(long, value_enum, default_value_t = FamilyArg::Baxter)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
    },
}

enum CliError {
    /// Bad arguments or an unsupported combination: exit 2.
    Usage(String),
    /// A library contract or verification failure: exit 1.
    Failure(String),
}

impl From<baxter_core::Error> for CliError {
    fn from(e: baxter_core::Error) -> Self {
        CliError::Failure(e.to_string())
    }
}

type CliResult = Result<i32, CliError>;

/// Entry point shared by the binary and the tests.
pub fn run(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let _ = write!(err, "{e}");
            return 2;
        }
    };
    let limit = match brute_limit() {
        Ok(l) => l,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return 2;
        }
    };
    match dispatch(&cli, limit, out) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(CliError::Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

fn brute_limit() -> Result<usize, String> {
    match std::env::var(BRUTE_LIMIT_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map_err(|_| format!("{BRUTE_LIMIT_ENV} must be a nonnegative integer, got `{v}`")),
        Err(_) => Ok(DEFAULT_BRUTE_LIMIT),
    }
}

fn dispatch(cli: &Cli, limit: usize, out: &mut dyn Write) -> CliResult {
    match &cli.verb {
        Verb::Count { family, n, method } => cmd_count(*family, *n, *method, cli, limit, out),
        Verb::List { family, n } => cmd_list(*family, *n, cli, limit, out),
        Verb::Check { perm } => cmd_check(perm, cli, out),
        Verb::Tree {
            rule,
            depth,
            explicit,
        } => cmd_tree(*rule, *depth, *explicit, cli, out),
        Verb::Verify { suite, max_n } => cmd_verify(*suite, *max_n, cli, limit, out),
        Verb::Stats { family, n } => cmd_stats(*family, *n, cli, limit, out),
    }
}

fn emit(out: &mut dyn Write, s: impl AsRef<str>) -> CliResult {
    writeln!(out, "{}", s.as_ref()).map_err(|e| CliError::Failure(e.to_string()))?;
    Ok(0)
}

/// Quote a CSV field when it contains a comma (comma-form permutations,
/// pair labels).
fn csv_field(s: &str) -> String {
    if s.contains(',') {
        format!("\"{s}\"")
    } else {
        s.to_string()
    }
}

fn cmd_count(
    family: FamilyArg,
    n: usize,
    method: MethodArg,
    cli: &Cli,
    limit: usize,
    out: &mut dyn Write,
) -> CliResult {
    let count = match method {
        MethodArg::Formula => formula_count(family, n)?,
        MethodArg::Tree => tree_count(family, n)?,
        MethodArg::Brute => brute_count_with_limit(n, family.spec(), limit, cli.jobs.max(1))?,
    };
    let method_name = match method {
        MethodArg::Formula => CountMethod::Formula,
        MethodArg::Tree => CountMethod::Tree,
        MethodArg::Brute => CountMethod::Brute,
    };
    match cli.format {
        Format::Lines => emit(out, count.to_string()),
        Format::Json => emit(
            out,
            json!({
                "n": n,
                "family": family.name(),
                "count": count.to_string(),
                "method": method_name.to_string(),
            })
            .to_string(),
        ),
        Format::Csv => {
            let mut table = CountTable::default();
            table.push(n, count, method_name);
            write!(out, "{}", table.to_csv()).map_err(|e| CliError::Failure(e.to_string()))?;
            Ok(0)
        }
    }
}

fn formula_count(family: FamilyArg, n: usize) -> Result<BigUint, CliError> {
    match family {
        FamilyArg::Baxter => Ok(baxter_count(n)?),
        FamilyArg::Quarter => Ok(quarter_turn_count(n)?),
        FamilyArg::FpfInvolution => {
            if n % 2 == 1 {
                Ok(BigUint::zero())
            } else if n == 0 {
                Err(CliError::Usage("--n must be at least 1".into()))
            } else {
                Ok(fpf_involution_count(n / 2)?)
            }
        }
        FamilyArg::Half => Err(CliError::Usage(
            "no closed formula for family `half`; use --method tree or --method brute".into(),
        )),
    }
}

fn tree_count(family: FamilyArg, n: usize) -> Result<BigUint, CliError> {
    if n == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    let (rule, rank) = match family {
        FamilyArg::Baxter => (Rule::Baxter, n - 1),
        FamilyArg::Half => {
            if n % 2 == 0 {
                (Rule::HalfEven, n / 2)
            } else {
                (Rule::HalfOdd, (n - 1) / 2)
            }
        }
        FamilyArg::Quarter => {
            if n % 4 != 1 {
                return Ok(BigUint::zero());
            }
            (Rule::Quarter, (n - 1) / 4)
        }
        FamilyArg::FpfInvolution => {
            return Err(CliError::Usage(
                "no generating tree for family `fpf-involution`; use --method formula or --method brute".into(),
            ))
        }
    };
    Ok(expand_rule(rule, rank).swap_remove(rank))
}

fn cmd_list(
    family: FamilyArg,
    n: usize,
    cli: &Cli,
    limit: usize,
    out: &mut dyn Write,
) -> CliResult {
    let mut members = Vec::new();
    for_each_member(n, family.spec(), limit, |w| members.push(w.clone()))?;
    members.sort();
    if cli.format == Format::Csv {
        emit(out, "perm")?;
    }
    for w in &members {
        match cli.format {
            Format::Lines => emit(out, w.to_string())?,
            Format::Json => emit(out, json!({ "perm": w.to_string() }).to_string())?,
            Format::Csv => emit(out, csv_field(&w.to_string()))?,
        };
    }
    Ok(0)
}

fn cmd_check(perm: &str, cli: &Cli, out: &mut dyn Write) -> CliResult {
    let w = parse_perm(perm).map_err(|e| CliError::Usage(e.to_string()))?;
    let patterns = [
        VincularPattern::three_one_four_two(),
        VincularPattern::two_four_one_three(),
    ];
    let mut occurrences: Vec<(String, Vec<usize>)> = Vec::new();
    for p in &patterns {
        for occ in vincular_occurrences(&w, p) {
            occurrences.push((p.to_string(), occ));
        }
    }
    let baxter = occurrences.is_empty();
    debug_assert_eq!(baxter, is_baxter(&w));
    let fmt_positions = |occ: &[usize]| {
        let parts: Vec<String> = occ.iter().map(|i| i.to_string()).collect();
        format!("({})", parts.join(","))
    };
    match cli.format {
        Format::Lines => {
            emit(
                out,
                format!("{w}: {}", if baxter { "Baxter" } else { "not Baxter" }),
            )?;
            for (pat, occ) in &occurrences {
                emit(out, format!("occurrence of {pat} at {}", fmt_positions(occ)))?;
            }
        }
        Format::Json => {
            let occs: Vec<serde_json::Value> = occurrences
                .iter()
                .map(|(pat, occ)| json!({ "pattern": pat, "positions": occ }))
                .collect();
            emit(
                out,
                json!({ "perm": w.to_string(), "baxter": baxter, "occurrences": occs })
                    .to_string(),
            )?;
        }
        Format::Csv => {
            emit(out, "perm,baxter,pattern,positions")?;
            if baxter {
                emit(out, format!("{},true,,", csv_field(&w.to_string())))?;
            }
            for (pat, occ) in &occurrences {
                emit(
                    out,
                    format!(
                        "{},false,{},{}",
                        csv_field(&w.to_string()),
                        pat,
                        csv_field(&fmt_positions(occ))
                    ),
                )?;
            }
        }
    }
    Ok(0)
}

fn cmd_tree(
    rule: RuleArg,
    depth: usize,
    explicit: bool,
    cli: &Cli,
    out: &mut dyn Write,
) -> CliResult {
    if !explicit {
        let sizes = expand_rule(rule.rule(), depth);
        if cli.format == Format::Csv {
            emit(out, "rank,size")?;
        }
        for (rank, size) in sizes.iter().enumerate() {
            match cli.format {
                Format::Lines => emit(out, format!("{rank}\t{size}"))?,
                Format::Json => {
                    emit(out, json!({ "rank": rank, "size": size.to_string() }).to_string())?
                }
                Format::Csv => emit(out, format!("{rank},{size}"))?,
            };
        }
        return Ok(0);
    }
    let family = rule.family().ok_or_else(|| {
        CliError::Usage("the catalan rule has no explicit permutation tree".into())
    })?;
    let tree = explicit_tree(family, depth)?;
    emit_tree(&tree, cli, out)
}

fn emit_tree(tree: &GenTree, cli: &Cli, out: &mut dyn Write) -> CliResult {
    if cli.format == Format::Csv {
        emit(out, "rank,perm,parent,label")?;
    }
    for (rank, level) in tree.levels.iter().enumerate() {
        for node in level {
            let parent = node
                .parent
                .filter(|_| rank > 0)
                .map(|p| tree.levels[rank - 1][p].perm.to_string());
            let label = tree.family.label_of(&node.perm).to_string();
            match cli.format {
                Format::Lines => emit(
                    out,
                    format!(
                        "{rank}\t{}\t{}\t{label}",
                        node.perm,
                        parent.as_deref().unwrap_or("-")
                    ),
                )?,
                Format::Json => emit(
                    out,
                    json!({
                        "rank": rank,
                        "perm": node.perm.to_string(),
                        "parent": parent,
                        "label": label,
                    })
                    .to_string(),
                )?,
                Format::Csv => emit(
                    out,
                    format!(
                        "{rank},{},{},{}",
                        csv_field(&node.perm.to_string()),
                        csv_field(parent.as_deref().unwrap_or("-")),
                        csv_field(&label)
                    ),
                )?,
            };
        }
    }
    Ok(0)
}

fn cmd_stats(
    family: FamilyArg,
    n: usize,
    cli: &Cli,
    limit: usize,
    out: &mut dyn Write,
) -> CliResult {
    let table = stats_table(n, family.spec(), limit)?;
    if cli.format == Format::Csv {
        emit(out, "descents,inverse_descents,count")?;
    }
    for (&(d, id), &count) in &table {
        match cli.format {
            Format::Lines => emit(out, format!("{d}\t{id}\t{count}"))?,
            Format::Json => emit(
                out,
                json!({ "descents": d, "inverse_descents": id, "count": count }).to_string(),
            )?,
            Format::Csv => emit(out, format!("{d},{id},{count}"))?,
        };
    }
    Ok(0)
}

// --- verify ------------------------------------------------------------

struct Report {
    results: Vec<(String, bool, String)>,
}

impl Report {
    fn new() -> Self {
        Report {
            results: Vec::new(),
        }
    }

    fn record(&mut self, name: &str, ok: bool, detail: String) {
        self.results.push((name.to_string(), ok, detail));
    }
}

fn cmd_verify(
    suite: SuiteArg,
    max_n: usize,
    cli: &Cli,
    limit: usize,
    out: &mut dyn Write,
) -> CliResult {
    let mut report = Report::new();
    if matches!(suite, SuiteArg::All | SuiteArg::Rules) {
        verify_rules(max_n, &mut report);
    }
    if matches!(suite, SuiteArg::All | SuiteArg::Isomorphism) {
        verify_isomorphism(max_n, &mut report)?;
    }
    if matches!(suite, SuiteArg::All | SuiteArg::Theorem) {
        verify_theorem(max_n, limit, cli.jobs.max(1), &mut report)?;
    }
    if matches!(suite, SuiteArg::All | SuiteArg::Formulas) {
        verify_formulas(max_n, limit, cli.jobs.max(1), &mut report)?;
    }
    let mut failed = false;
    for (name, ok, detail) in &report.results {
        failed |= !ok;
        let status = if *ok { "PASS" } else { "FAIL" };
        match cli.format {
            Format::Lines => emit(out, format!("{status} {name}: {detail}"))?,
            Format::Json => emit(
                out,
                json!({ "invariant": name, "pass": ok, "detail": detail }).to_string(),
            )?,
            Format::Csv => emit(
                out,
                format!("{},{},{}", name, status, csv_field(detail)),
            )?,
        };
    }
    Ok(if failed { 1 } else { 0 })
}

/// All three admissibility rules versus brute insertion filters.
fn verify_rules(max_n: usize, report: &mut Report) {
    let bound = max_n.min(8);
    let mut checked = 0usize;
    let mut witness: Option<String> = None;
    for n in 0..=bound {
        for w in Permutation::all(n).filter(is_baxter) {
            let largest_ok = admissible_largest_gaps(&w).unwrap()
                == (0..=n)
                    .filter(|&g| is_baxter(&insert_largest(&w, g).unwrap()))
                    .collect::<Vec<_>>();
            let smallest_ok = admissible_smallest_gaps(&w).unwrap()
                == (0..=n)
                    .filter(|&g| is_baxter(&insert_smallest(&w, g).unwrap()))
                    .collect::<Vec<_>>();
            let boundary_ok = [Side::Front, Side::Back].into_iter().all(|side| {
                admissible_boundary_labels(&w, side).unwrap()
                    == (1..=n as u32 + 1)
                        .filter(|&j| is_baxter(&insert_boundary(&w, side, j).unwrap()))
                        .collect::<Vec<_>>()
            });
            if !(largest_ok && smallest_ok && boundary_ok) && witness.is_none() {
                witness = Some(w.to_string());
            }
            checked += 1;
        }
    }
    match witness {
        None => report.record(
            "rules",
            true,
            format!("admissible largest/smallest/boundary rules equal brute filters on {checked} Baxter permutations (n <= {bound})"),
        ),
        Some(w) => report.record("rules", false, format!("mismatch at witness {w}")),
    }
}

/// Explicit trees versus their succession rules.
fn verify_isomorphism(max_n: usize, report: &mut Report) -> Result<(), CliError> {
    let cases = [
        (TreeFamily::Baxter, Rule::Baxter, max_n.saturating_sub(1).min(7)),
        (TreeFamily::HalfEven, Rule::HalfEven, (max_n / 2).min(5)),
        (TreeFamily::HalfOdd, Rule::HalfOdd, (max_n.saturating_sub(1) / 2).min(4)),
        (TreeFamily::Quarter, Rule::Quarter, (max_n.saturating_sub(1) / 4).min(3)),
    ];
    for (family, rule, depth) in cases {
        let iso = check_isomorphism(family, rule, depth)?;
        let name = format!("isomorphism-{family}");
        if iso.is_clean() {
            report.record(
                &name,
                true,
                format!("{} nodes match rule {rule} to depth {depth}", iso.nodes_checked),
            );
        } else {
            let witness = iso
                .mismatches
                .first()
                .map(|m| m.path.last().map(|p| p.to_string()).unwrap_or_default())
                .unwrap_or_default();
            report.record(
                &name,
                false,
                format!("{} mismatches, first at {witness}", iso.mismatches.len()),
            );
        }
    }
    Ok(())
}

/// The quarter-turn count by formula, tree, and brute force.
fn verify_theorem(
    max_n: usize,
    limit: usize,
    jobs: usize,
    report: &mut Report,
) -> Result<(), CliError> {
    let max_m = if max_n >= 1 { (max_n - 1) / 4 } else { 0 };
    let tree = explicit_tree(TreeFamily::Quarter, max_m.min(3))?;
    let mut ok = true;
    let mut detail = String::new();
    for m in 0..=max_m {
        let n = 4 * m + 1;
        let formula = quarter_turn_count(n)?;
        if m <= 3 {
            let tree_size = BigUint::from(tree.level_sizes()[m]);
            if tree_size != formula {
                ok = false;
                detail = format!("tree size {tree_size} != formula {formula} at n = {n}");
                break;
            }
        }
        if n <= limit + 6 {
            let brute: usize = rot90_fixed_perms(n).into_iter().filter(is_baxter).count();
            if BigUint::from(brute) != formula {
                ok = false;
                detail = format!("brute {brute} != formula {formula} at n = {n}");
                break;
            }
        }
    }
    if ok {
        for n in (1..=max_n).filter(|n| n % 4 != 1) {
            if !quarter_turn_count(n)?.is_zero() {
                ok = false;
                detail = format!("nonzero count at n = {n}");
                break;
            }
            if n <= limit.min(9) {
                let brute = brute_count_with_limit(
                    n,
                    FamilyArg::Quarter.spec(),
                    limit,
                    jobs,
                )?;
                if !brute.is_zero() {
                    ok = false;
                    detail = format!("brute found members at n = {n}");
                    break;
                }
            }
        }
    }
    if ok {
        detail = format!(
            "quarter-turn counts match formula, tree, and brute force up to n = {max_n}"
        );
    }
    report.record("theorem", ok, detail);
    Ok(())
}

/// Closed forms versus brute force, and exactness of every division.
fn verify_formulas(
    max_n: usize,
    limit: usize,
    jobs: usize,
    report: &mut Report,
) -> Result<(), CliError> {
    let bound = max_n.min(8).min(limit);
    let mut ok = true;
    let mut detail = String::new();
    for n in 1..=bound {
        let brute = brute_count_with_limit(n, FamilySpec::baxter(), limit, jobs)?;
        if baxter_count(n)? != brute {
            ok = false;
            detail = format!("baxter_count({n}) != brute count {brute}");
            break;
        }
    }
    if ok {
        for n in 1..=bound / 2 {
            let brute =
                brute_count_with_limit(2 * n, FamilySpec::fpf_involution_baxter(), limit, jobs)?;
            if fpf_involution_count(n)? != brute {
                ok = false;
                detail = format!("fpf_involution_count({n}) != brute count {brute}");
                break;
            }
        }
    }
    if ok {
        for n in 1..=200 {
            if baxter_count(n).is_err() || fpf_involution_count(n).is_err() {
                ok = false;
                detail = format!("inexact division at n = {n}");
                break;
            }
        }
    }
    if ok {
        detail = format!(
            "closed forms match brute force up to n = {bound}; divisions exact to n = 200"
        );
    }
    report.record("formulas", ok, detail);
    Ok(())
}
