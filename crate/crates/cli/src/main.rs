use std::fs;
use std::io::{Read, Write};
use std::process::ExitCode;

use bkit::decompose::{block_key, canonical_pair_prime, decompose, verify_decomposition, CanonicalBlock};
use bkit::form::{pairing_from_matrix, pairing_from_snf};
use bkit::iso::{isotest_forms, SearchBound, Verdict};
use bkit::realize::{direct_sum, realize_block, realize_form, realize_module, surgery_recipe};
use bkit::snf::smith_normal_form;
use bkit::wire::{self, parse_document};
use bkit::{AlexanderModule, Error, LambdaMatrix, LaurentPoly, SymmetricPoly};
use clap::{Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

const EXIT_FAIL: u8 = 2;
const EXIT_SINGULAR: u8 = 3;
const EXIT_UNKNOWN: u8 = 4;
const EXIT_PARSE: u8 = 64;
const EXIT_DATA: u8 = 65;
const EXIT_NOINPUT: u8 = 66;
const EXIT_IO: u8 = 74;

/// Alexander modules and Blanchfield forms over Q[t, t^-1].
#[derive(Parser)]
#[command(name = "bkit", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Report whether a matrix is hermitian and admissible.
    Check { matrix: String },
    /// Smith normal form with transforms.
    Snf { matrix: String },
    /// Test the realizability conditions on a module.
    Classify { module: String },
    /// Pairing presented by a hermitian matrix.
    Blanchfield { matrix: String },
    /// Orthogonal splitting of a form into canonical blocks.
    Decompose { form: String },
    /// Hermitian matrix for a module, a form, a block or a block list.
    Realize {
        input: String,
        #[arg(long)]
        surgery: bool,
    },
    /// Compare two forms.
    Isotest {
        first: String,
        second: String,
        /// Exponent and coefficient-height bound for the search.
        #[arg(long, default_value_t = 2)]
        bound: u32,
    },
    /// Coefficients and linking table of a hermitian matrix.
    Surgery { matrix: String },
    /// Randomized realize / extract / decompose roundtrips.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 25)]
        cases: usize,
    },
}

struct Failure {
    code: u8,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) => EXIT_PARSE,
            Error::SingularMatrix => EXIT_SINGULAR,
            _ => EXIT_DATA,
        };
        Failure { code, msg: e.to_string() }
    }
}

fn read_input(path: &str) -> Result<Value, Failure> {
    let mut text = String::new();
    let res = if path == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Failure { code: EXIT_NOINPUT, msg: format!("{path}: {e}") })?;
    Ok(parse_document(&text)?)
}

fn matrix_arg(path: &str) -> Result<LambdaMatrix, Failure> {
    Ok(wire::parse_matrix(&read_input(path)?)?)
}

fn run(cmd: Cmd) -> Result<(Value, u8), Failure> {
    match cmd {
        Cmd::Check { matrix } => {
            let a = matrix_arg(&matrix)?;
            let ok = a.is_hermitian() && a.is_admissible();
            Ok((wire::check_to_json(&a), if ok { 0 } else { EXIT_FAIL }))
        }
        Cmd::Snf { matrix } => {
            let snf = smith_normal_form(&matrix_arg(&matrix)?);
            let out = wire::snf_to_json(&snf);
            let code = if snf.diagonal.iter().any(LaurentPoly::is_zero) { EXIT_SINGULAR } else { 0 };
            Ok((out, code))
        }
        Cmd::Classify { module } => {
            let m = wire::parse_module(&read_input(&module)?)?;
            Ok((wire::classifier_to_json(&m.classify()), 0))
        }
        Cmd::Blanchfield { matrix } => {
            let a = matrix_arg(&matrix)?;
            Ok((wire::form_to_json(&pairing_from_matrix(&a)?), 0))
        }
        Cmd::Decompose { form } => {
            let f = wire::parse_form(&read_input(&form)?)?;
            let r = decompose(&f)?;
            if !verify_decomposition(&f, &r).ok {
                return Err(Error::Internal("decomposition failed verification".into()).into());
            }
            Ok((wire::decomposition_to_json(&r), 0))
        }
        Cmd::Realize { input, surgery } => {
            let v = read_input(&input)?;
            let a = realize_any(&v)?;
            let out = if surgery {
                json!({ "matrix": wire::matrix_to_json(&a), "recipe": wire::recipe_to_json(&surgery_recipe(&a)?) })
            } else {
                wire::matrix_to_json(&a)
            };
            Ok((out, 0))
        }
        Cmd::Isotest { first, second, bound } => {
            let f1 = wire::parse_form(&read_input(&first)?)?;
            let f2 = wire::parse_form(&read_input(&second)?)?;
            let r = isotest_forms(&f1, &f2, SearchBound::uniform(bound))?;
            let code = match r.verdict {
                Verdict::Iso => 0,
                Verdict::NotIso => EXIT_FAIL,
                Verdict::Unknown => EXIT_UNKNOWN,
            };
            Ok((wire::iso_report_to_json(&r), code))
        }
        Cmd::Surgery { matrix } => Ok((wire::recipe_to_json(&surgery_recipe(&matrix_arg(&matrix)?)?), 0)),
        Cmd::Selftest { seed, cases } => selftest(seed, cases),
    }
}

fn realize_any(v: &Value) -> Result<LambdaMatrix, Failure> {
    if v.get("gram").is_some() {
        Ok(realize_form(&wire::parse_form(v)?)?)
    } else if v.get("invariant_factors").is_some() {
        Ok(realize_module(&wire::parse_module(v)?)?)
    } else if v.get("blocks").is_some() {
        let r = wire::parse_decomposition(v)?;
        let blocks = r.blocks.iter().map(realize_block).collect::<Result<Vec<_>, _>>()?;
        Ok(direct_sum(&blocks))
    } else if v.get("kind").is_some() {
        Ok(realize_block(&wire::parse_block(v)?)?)
    } else {
        Err(Error::Parse("expected a module, form, block or block list".into()).into())
    }
}

fn random_block(rng: &mut ChaCha8Rng) -> CanonicalBlock {
    let n = rng.gen_range(1..=3);
    match rng.gen_range(0..4) {
        0 => {
            let pi = [LaurentPoly::from_ints(-1, &[1, -1, 1]), LaurentPoly::from_ints(-1, &[1, -3, 1])][rng.gen_range(0..2)].clone();
            let c = rng.gen_range(1..=3);
            CanonicalBlock::SymmetricCyclic { pi, n, p: SymmetricPoly::from_ints(&[c]) }
        }
        1 => CanonicalBlock::SymmetricCyclic { pi: LaurentPoly::from_ints(-1, &[1, 2, 1]), n, p: SymmetricPoly::one() },
        2 => CanonicalBlock::HyperbolicPair { pi: canonical_pair_prime(&LaurentPoly::from_ints(0, &[-2, 1])), n },
        _ => CanonicalBlock::HyperbolicPair { pi: LaurentPoly::from_ints(0, &[1, 1]), n: 2 * n - 1 },
    }
}

fn selftest(seed: u64, cases: usize) -> Result<(Value, u8), Failure> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failed = Vec::new();
    for case in 0..cases {
        let k = rng.gen_range(1..=3);
        let blocks: Vec<CanonicalBlock> = (0..k).map(|_| random_block(&mut rng)).collect();
        let ok = (|| -> Result<bool, Error> {
            let a = direct_sum(&blocks.iter().map(realize_block).collect::<Result<Vec<_>, _>>()?);
            let f = pairing_from_snf(&a, &smith_normal_form(&a))?;
            if !f.is_nondegenerate() || AlexanderModule::from_matrix(&a)? != *f.module() {
                return Ok(false);
            }
            let r = decompose(&f)?;
            let key = |b: &CanonicalBlock| (b.kind(), block_key(b));
            let mut want: Vec<_> = blocks.iter().map(key).collect();
            let mut got: Vec<_> = r.blocks.iter().map(key).collect();
            want.sort();
            got.sort();
            Ok(want == got && verify_decomposition(&f, &r).ok)
        })();
        if !matches!(ok, Ok(true)) {
            failed.push(json!({ "case": case, "error": ok.err().map(|e| e.to_string()) }));
        }
    }
    let code = if failed.is_empty() { 0 } else { EXIT_FAIL };
    Ok((json!({ "seed": seed, "cases": cases, "failed": failed }), code))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_PARSE } else { 0 });
        }
    };
    match run(cli.cmd) {
        Ok((out, code)) => {
            let mut stdout = std::io::stdout().lock();
            let text = serde_json::to_string_pretty(&out).expect("json");
            if writeln!(stdout, "{text}").is_err() {
                return ExitCode::from(EXIT_IO);
            }
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}
