//! Command-line interface: argument parsing, line/point/form input
//! formats, and text or JSON rendering of query results and verification
//! reports.

use crate::clifford::{
    clifford_parallel, left_parallel, ortho_intersect, related, right_parallel,
    spread_line_through, transversal_count, Regulus, Spread,
};
use crate::error::{Error, Result};
use crate::klein::{classicality_report, klein_map, EllipticSpace, Line, Side};
use crate::linemaps::{classify, common_perpendicular, reflection, Classification, LineMap};
use crate::mat::Mat;
use crate::polarity::Polarity;
use crate::projective::Point;
use crate::sample::Sampler;
use crate::scalar::{self, Scalar};
use crate::verify::{run_all, run_scenario, Report, DEFAULT_TRIALS, SCENARIOS};
use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde_json::{json, Value};
use std::ffi::OsString;
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(
    name = "cliffline",
    about = "Exact line geometry of elliptic 3-space: queries and verification",
    version
)]
struct Cli {
    /// Symmetric 4x4 form file: first line "4", then four rows of four
    /// rational entries (default: the identity form).
    #[arg(long, global = true)]
    form: Option<PathBuf>,

    /// Seed for all randomized commands.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,

    /// Trial count for randomized commands.
    #[arg(long, global = true, default_value_t = DEFAULT_TRIALS)]
    trials: u32,

    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

/// A line argument is either two point rows "x0 x1 x2 x3 ; y0 y1 y2 y3"
/// or a Plücker sextuple "p01 p02 p03 p23 p31 p12"; entries are integers
/// or fractions "a/b".
#[derive(Subcommand)]
enum Command {
    /// Print the polar line of a line.
    Polar { line: String },
    /// Print the quadric image of a line with its polar image and the two
    /// invariant-plane projections.
    Klein { line: String },
    /// Report every pairwise relation between two lines.
    Relate { a: String, b: String },
    /// Report left/right/either-sided parallelism of two lines.
    Parallel { a: String, b: String },
    /// Print the member of a parallel class through a point.
    SpreadLine {
        /// "left" or "right".
        side: String,
        /// Base line of the class.
        base: String,
        /// Point "x0 x1 x2 x3" the member must pass through.
        point: String,
    },
    /// Sample members of the regulus cut out of a parallel class by a
    /// transversal line.
    Regulus {
        /// "left" or "right".
        side: String,
        /// Base line of the class.
        base: String,
        /// Transversal line meeting the class properly.
        transversal: String,
        /// How many members to print.
        #[arg(long, default_value_t = 8)]
        count: usize,
    },
    /// Print the common perpendicular pair of two skew, non-polar lines.
    Perp { g: String, h: String },
    /// Apply the reflection at a point to a line.
    Reflect { center: String, line: String },
    /// Classify the composite of reflections at the given centers as
    /// direct or opposite (rightmost center acts first).
    Classify {
        #[arg(required = true)]
        centers: Vec<String>,
    },
    /// Run a registered verification scenario, or all of them.
    Verify {
        /// Scenario name, or "all" (the default).
        scenario: Option<String>,
    },
}

/// Entry point: parse `argv`, execute, and return the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return err.exit_code();
        }
    };
    match execute(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            1
        }
    }
}

fn execute(cli: &Cli) -> Result<i32> {
    let es = space_from(cli.form.as_deref())?;
    match &cli.command {
        Command::Polar { line } => {
            let a = parse_line_spec(line)?;
            let p = es.polar_line(&a);
            if cli.json {
                emit(json!({ "line": line_json(&a), "polar": line_json(&p) }));
            } else {
                println!("line:  ({a})");
                println!("polar: ({p})");
            }
        }
        Command::Klein { line } => {
            let a = parse_line_spec(line)?;
            let p = es.polar_line(&a);
            let left = es.left_image(&a);
            let right = es.right_image(&a);
            if cli.json {
                emit(json!({
                    "image": line_json(&a),
                    "polar": line_json(&p),
                    "left": coords_json(left.coords()),
                    "right": coords_json(right.coords()),
                }));
            } else {
                println!("image: ({a})");
                println!("polar: ({p})");
                println!("left:  ({})", scalar::fmt_vec(left.coords()));
                println!("right: ({})", scalar::fmt_vec(right.coords()));
            }
        }
        Command::Relate { a, b } => {
            let a = parse_line_spec(a)?;
            let b = parse_line_spec(b)?;
            let count = transversal_count(&es, &a, &b);
            let report = [
                ("orthogonal intersection", ortho_intersect(&es, &a, &b)),
                ("related", related(&es, &a, &b)),
                ("left parallel", left_parallel(&es, &a, &b)),
                ("right parallel", right_parallel(&es, &a, &b)),
                ("parallel", clifford_parallel(&es, &a, &b)),
            ];
            if cli.json {
                emit(json!({
                    "ortho_intersect": report[0].1,
                    "related": report[1].1,
                    "left_parallel": report[2].1,
                    "right_parallel": report[3].1,
                    "parallel": report[4].1,
                    "transversals": count.to_string(),
                }));
            } else {
                for (label, value) in report {
                    println!("{label:<24} {value}");
                }
                println!("{:<24} {count}", "transversals");
            }
        }
        Command::Parallel { a, b } => {
            let a = parse_line_spec(a)?;
            let b = parse_line_spec(b)?;
            let l = left_parallel(&es, &a, &b);
            let r = right_parallel(&es, &a, &b);
            if cli.json {
                emit(json!({ "left_parallel": l, "right_parallel": r, "parallel": l || r }));
            } else {
                println!("{:<24} {l}", "left parallel");
                println!("{:<24} {r}", "right parallel");
                println!("{:<24} {}", "parallel", l || r);
            }
        }
        Command::SpreadLine { side, base, point } => {
            let side = parse_side(side)?;
            let base = parse_line_spec(base)?;
            let q = parse_point_spec(point)?;
            let spread = Spread::new(&es, side, base);
            let member = spread_line_through(&es, &spread, &q)?;
            if cli.json {
                emit(json!({ "member": line_json(&member) }));
            } else {
                println!("member: ({member})");
            }
        }
        Command::Regulus { side, base, transversal, count } => {
            let side = parse_side(side)?;
            let base = parse_line_spec(base)?;
            let t = parse_line_spec(transversal)?;
            let regulus = Regulus::new(Spread::new(&es, side, base), t)?;
            let members = regulus.sample_members(*count);
            if cli.json {
                emit(json!({ "members": members.iter().map(line_json).collect::<Vec<_>>() }));
            } else {
                for member in &members {
                    println!("member: ({member})");
                }
            }
        }
        Command::Perp { g, h } => {
            let g = parse_line_spec(g)?;
            let h = parse_line_spec(h)?;
            let (d, dp) = common_perpendicular(&es, &g, &h)?;
            if cli.json {
                emit(json!({ "perpendicular": line_json(&d), "polar_mate": line_json(&dp) }));
            } else {
                println!("perpendicular: ({d})");
                println!("polar mate:    ({dp})");
            }
        }
        Command::Reflect { center, line } => {
            let center = parse_point_spec(center)?;
            let a = parse_line_spec(line)?;
            let image = reflection(&es, &center).apply(&a);
            if cli.json {
                emit(json!({ "image": line_json(&image) }));
            } else {
                println!("image: ({image})");
            }
        }
        Command::Classify { centers } => {
            let mut map: Option<LineMap> = None;
            for spec in centers {
                let r = reflection(&es, &parse_point_spec(spec)?);
                map = Some(match map {
                    None => r,
                    Some(outer) => outer.compose(&r)?,
                });
            }
            let map = map.expect("clap enforces at least one center");
            let mut sampler = Sampler::derive(cli.seed, "cli:classify");
            match classify(&es, &map, &mut sampler, cli.trials.max(8)) {
                Classification::Direct => {
                    if cli.json {
                        emit(json!({ "classification": "direct" }));
                    } else {
                        println!("classification: direct");
                    }
                }
                Classification::Opposite => {
                    if cli.json {
                        emit(json!({ "classification": "opposite" }));
                    } else {
                        println!("classification: opposite");
                    }
                }
                Classification::Neither { witness: (a, b) } => {
                    if cli.json {
                        emit(json!({
                            "classification": "neither",
                            "witness": [line_json(&a), line_json(&b)],
                        }));
                    } else {
                        println!("classification: neither");
                        println!("witness: lines ({a}) and ({b})");
                    }
                }
            }
        }
        Command::Verify { scenario } => {
            let reports = match scenario.as_deref() {
                None | Some("all") => {
                    if cli.trials == DEFAULT_TRIALS {
                        run_all(&es, cli.seed)?
                    } else {
                        SCENARIOS
                            .par_iter()
                            .map(|name| run_scenario(&es, name, cli.seed, cli.trials))
                            .collect::<Result<Vec<_>>>()?
                    }
                }
                Some(name) => vec![run_scenario(&es, name, cli.seed, cli.trials)?],
            };
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&reports)
                        .expect("reports serialize to JSON")
                );
            } else {
                for report in &reports {
                    print_report(report);
                }
            }
            let ok = reports.iter().all(Report::passed);
            return Ok(if ok { 0 } else { 1 });
        }
    }
    Ok(0)
}

fn emit(value: Value) {
    println!("{}", serde_json::to_string_pretty(&value).expect("values serialize"));
}

fn coords_json(coords: &[Scalar]) -> Value {
    json!(coords.iter().map(scalar::fmt_scalar).collect::<Vec<_>>())
}

fn line_json(line: &Line) -> Value {
    coords_json(line.plucker())
}

fn print_report(report: &Report) {
    let status = if report.passed() { "pass" } else { "FAIL" };
    let exact = if report.exact { ", exact" } else { "" };
    println!(
        "scenario {}: {status} ({} trials, {} violations, {} inconclusive{exact})",
        report.scenario,
        report.trials,
        report.violations.len(),
        report.inconclusive,
    );
    for v in &report.violations {
        println!("  trial {}: {}", v.trial, v.witness);
        println!("    expected: {}", v.expected);
        println!("    actual:   {}", v.actual);
    }
}

/// Build the working space from an optional form file.
fn space_from(form: Option<&Path>) -> Result<EllipticSpace> {
    let Some(path) = form else {
        return Ok(EllipticSpace::standard());
    };
    let text = std::fs::read_to_string(path)
        .map_err(|err| Error::Internal(format!("cannot read {}: {err}", path.display())))?;
    let mat = load_form(&text).map_err(|err| located(err, &text))?;
    match Polarity::new(mat.clone()).and_then(EllipticSpace::new) {
        Ok(es) => Ok(es),
        Err(err) => {
            eprintln!("form rejected: not a classical elliptic polarity");
            eprintln!("{}", classicality_report(&mat));
            Err(err)
        }
    }
}

/// Parse the form file format: the dimension header "4" followed by
/// sixteen rational entries in row order.
pub fn load_form(text: &str) -> Result<Mat> {
    let tokens = tokenize(text);
    let Some((head, head_off)) = tokens.first() else {
        return Err(Error::Parse { offset: 0, message: "empty form file".into() });
    };
    if head != "4" {
        return Err(Error::Parse {
            offset: *head_off,
            message: format!("form file must begin with the dimension 4, found {head:?}"),
        });
    }
    if tokens.len() != 17 {
        return Err(Error::Parse {
            offset: tokens.last().map_or(0, |(tok, off)| off + tok.len()),
            message: format!("expected 16 form entries after the header, found {}", tokens.len() - 1),
        });
    }
    let mut rows = Vec::with_capacity(4);
    for r in 0..4 {
        let mut row = Vec::with_capacity(4);
        for c in 0..4 {
            let (tok, off) = &tokens[1 + 4 * r + c];
            row.push(scalar::parse_scalar(tok, *off)?);
        }
        rows.push(row);
    }
    let mat = Mat::from_rows(rows);
    if !mat.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    Ok(mat)
}

/// Parse a line given either as two point rows separated by ';' or as a
/// Plücker sextuple.
pub fn parse_line_spec(src: &str) -> Result<Line> {
    parse_line_inner(src).map_err(|err| located(err, src))
}

fn parse_line_inner(src: &str) -> Result<Line> {
    let (rows, separators) = split_rows(src);
    match separators.len() {
        0 => {
            let row = &rows[0];
            if row.len() != 6 {
                return Err(Error::Parse {
                    offset: row_end(src, row),
                    message: format!(
                        "expected 6 line coordinates or two ';'-separated point rows, found {} entries",
                        row.len()
                    ),
                });
            }
            let coords =
                row.iter().map(|(tok, off)| scalar::parse_scalar(tok, *off)).collect::<Result<_>>()?;
            Line::new(coords)
        }
        1 => {
            let x = parse_point_row(src, &rows[0])?;
            let y = parse_point_row(src, &rows[1])?;
            klein_map(&x, &y)
        }
        _ => Err(Error::Parse {
            offset: separators[1],
            message: "a line takes at most one ';' separator".into(),
        }),
    }
}

/// Parse a point "x0 x1 x2 x3".
pub fn parse_point_spec(src: &str) -> Result<Point> {
    let (rows, separators) = split_rows(src);
    if let Some(&off) = separators.first() {
        return Err(located(
            Error::Parse { offset: off, message: "a point takes no ';' separator".into() },
            src,
        ));
    }
    parse_point_row(src, &rows[0]).map_err(|err| located(err, src))
}

fn parse_point_row(src: &str, row: &[(String, usize)]) -> Result<Point> {
    if row.len() != 4 {
        return Err(Error::Parse {
            offset: row_end(src, row),
            message: format!("expected 4 point coordinates, found {}", row.len()),
        });
    }
    let coords =
        row.iter().map(|(tok, off)| scalar::parse_scalar(tok, *off)).collect::<Result<_>>()?;
    Point::new(coords)
}

fn parse_side(src: &str) -> Result<Side> {
    match src.to_ascii_lowercase().as_str() {
        "left" | "l" => Ok(Side::Left),
        "right" | "r" => Ok(Side::Right),
        _ => Err(Error::Parse {
            offset: 0,
            message: format!("expected side \"left\" or \"right\", found {src:?}"),
        }),
    }
}

/// Whitespace tokens of `src` with byte offsets, split into rows at ';'.
fn split_rows(src: &str) -> (Vec<Vec<(String, usize)>>, Vec<usize>) {
    let mut rows = vec![Vec::new()];
    let mut separators = Vec::new();
    let mut token = String::new();
    let mut start = 0;
    for (i, ch) in src.char_indices() {
        if ch == ';' || ch.is_whitespace() {
            if !token.is_empty() {
                rows.last_mut().unwrap().push((std::mem::take(&mut token), start));
            }
            if ch == ';' {
                separators.push(i);
                rows.push(Vec::new());
            }
        } else {
            if token.is_empty() {
                start = i;
            }
            token.push(ch);
        }
    }
    if !token.is_empty() {
        rows.last_mut().unwrap().push((token, start));
    }
    (rows, separators)
}

fn tokenize(src: &str) -> Vec<(String, usize)> {
    split_rows(src).0.into_iter().flatten().collect()
}

fn row_end(src: &str, row: &[(String, usize)]) -> usize {
    row.last().map_or(src.len(), |(tok, off)| off + tok.len())
}

/// Rewrite a parse error's message to carry the line and column of its
/// offset within `src`.
fn located(err: Error, src: &str) -> Error {
    let Error::Parse { offset, message } = err else { return err };
    let clamped = offset.min(src.len());
    let line = src[..clamped].bytes().filter(|&b| b == b'\n').count() + 1;
    let column = src[..clamped].rfind('\n').map_or(clamped + 1, |nl| clamped - nl);
    if message.starts_with("line ") {
        return Error::Parse { offset, message };
    }
    Error::Parse { offset, message: format!("line {line}, column {column}: {message}") }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sextuple_and_point_rows_agree() {
        let from_rows = parse_line_spec("1 0 0 0; 0 1 0 0").unwrap();
        let from_sextuple = parse_line_spec("1 0 0 0 0 0").unwrap();
        assert_eq!(from_rows, from_sextuple);
        let fractional = parse_line_spec("1/2 0 0 0 0 0").unwrap();
        assert_eq!(fractional, from_sextuple);
    }

    #[test]
    fn sextuple_must_satisfy_the_quadric_equation() {
        assert!(matches!(parse_line_spec("1 0 0 1 0 0"), Err(Error::NotOnQuadric)));
    }

    #[test]
    fn parse_errors_carry_line_and_column() {
        let err = parse_line_spec("1 0 0 x; 0 1 0 0").unwrap_err();
        let Error::Parse { offset, message } = err else { panic!("expected a parse error") };
        assert_eq!(offset, 6);
        assert!(message.contains("line 1, column 7"), "message: {message}");

        let err = parse_line_spec("1 0 0; 0 1 0 0").unwrap_err();
        let Error::Parse { message, .. } = err else { panic!("expected a parse error") };
        assert!(message.contains("expected 4 point coordinates"), "message: {message}");

        let err = parse_line_spec("1 0; 0 1; 0 0").unwrap_err();
        let Error::Parse { message, .. } = err else { panic!("expected a parse error") };
        assert!(message.contains("at most one ';'"), "message: {message}");
    }

    #[test]
    fn form_files_are_validated() {
        let identity = "4\n1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n";
        let mat = load_form(identity).unwrap();
        assert!(mat.is_symmetric());

        let asymmetric = "4\n1 2 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n";
        assert!(matches!(load_form(asymmetric), Err(Error::NotSymmetric)));

        let wrong_header = "3\n1 0 0\n0 1 0\n0 0 1\n";
        let Error::Parse { message, .. } = load_form(wrong_header).unwrap_err() else {
            panic!("expected a parse error");
        };
        assert!(message.contains("dimension 4"), "message: {message}");

        let truncated = "4\n1 0 0 0\n0 1 0 0\n";
        assert!(matches!(load_form(truncated), Err(Error::Parse { .. })));
    }

    #[test]
    fn form_file_errors_locate_the_bad_entry() {
        let text = "4\n1 0 0 0\n0 1 0 0\n0 0 z 0\n0 0 0 1\n";
        let err = load_form(text).map_err(|e| located(e, text)).unwrap_err();
        let Error::Parse { message, .. } = err else { panic!("expected a parse error") };
        assert!(message.contains("line 4, column 5"), "message: {message}");
    }

    #[test]
    fn sides_parse_case_insensitively() {
        assert_eq!(parse_side("left").unwrap(), Side::Left);
        assert_eq!(parse_side("R").unwrap(), Side::Right);
        assert!(parse_side("center").is_err());
    }

    #[test]
    fn run_reports_usage_errors_without_panicking() {
        assert_ne!(run(["cliffline", "no-such-command"]), 0);
        assert_ne!(run(["cliffline"]), 0);
    }
}
