use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};
use tracezero::dynamics::{classify_convergence, orbit, stable_set, Topology};
use tracezero::frobenius::{psym_check, PsymCheck, SymMatN};
use tracezero::geometry::{
    compose_rotation_reflection, reflection_matrix, rotation_matrix, Direction, ReflectScale,
};
use tracezero::structure::{
    classify_orthogonal, corollary_witness, decompose, Orthogonal2, TraceZeroSym2,
};
use tracezero::{Mat2, Point2, Tolerance};

use crate::error::{CliError, CliResult};
use crate::format::g17;
use crate::svg;

pub const MAX_PSYM_DIM: usize = 64;
const COMPOSE_RESIDUAL_LIMIT: f64 = 1e-12;

pub struct OrbitArgs {
    pub x: f64,
    pub y: f64,
    pub lambda: Option<f64>,
    pub axis: Option<f64>,
    pub from_matrix: Option<Vec<f64>>,
    pub iters: usize,
    pub out: Option<PathBuf>,
    pub svg: Option<PathBuf>,
}

pub struct Ctx {
    tol: Tolerance,
    json: bool,
    degrees: bool,
}

fn finite(name: &str, v: f64) -> CliResult<f64> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(CliError::Input(format!("{name} must be finite, got {v}")))
    }
}

fn matrix_arg(entries: &[f64]) -> CliResult<Mat2> {
    for (name, &v) in ["a", "b", "c", "d"].iter().zip(entries) {
        finite(name, v)?;
    }
    Ok(Mat2::new(entries[0], entries[1], entries[2], entries[3]))
}

fn mat_text(m: &Mat2) -> String {
    let [a, b, c, d] = m.to_row_major();
    format!("[{a:?}, {b:?}; {c:?}, {d:?}]")
}

fn mat_json(m: &Mat2) -> Value {
    json!([[m.get(0, 0), m.get(0, 1)], [m.get(1, 0), m.get(1, 1)]])
}

fn write_file(path: &Path, contents: &str) -> CliResult<()> {
    fs::write(path, contents).map_err(|e| CliError::io(path, e))
}

impl Ctx {
    pub fn new(tol: f64, json: bool, degrees: bool) -> CliResult<Self> {
        let tol = Tolerance::new(tol)?;
        Ok(Ctx { tol, json, degrees })
    }

    fn angle(&self, name: &str, v: f64) -> CliResult<f64> {
        let v = finite(name, v)?;
        Ok(if self.degrees { v.to_radians() } else { v })
    }

    fn emit(&self, text: String, value: Value) {
        if self.json {
            println!("{value:#}");
        } else {
            print!("{text}");
        }
    }

    fn params_report(a: &TraceZeroSym2) -> (String, Value) {
        let m = a.matrix();
        let (lo, hi) = a.eigenvalues();
        let (refl, scale) = corollary_witness(a);
        let text = format!(
            "lambda = {:?}\ntheta = {:?}\naxis = {:?}\nmatrix = {}\neigenvalues = {lo:?}, {hi:?}\nwitness = {scale:?} * Reflection({:?})\n",
            a.lambda(),
            a.theta(),
            a.axis_angle(),
            mat_text(&m),
            refl.angle(),
        );
        let value = json!({
            "lambda": a.lambda(),
            "theta": a.theta(),
            "axis": a.axis_angle(),
            "matrix": mat_json(&m),
            "eigenvalues": [lo, hi],
            "witness": { "scale": scale, "orthogonal": refl },
        });
        (text, value)
    }

    pub fn decompose(&self, entries: &[f64]) -> CliResult<()> {
        let a = decompose(&matrix_arg(entries)?, self.tol)?;
        let (text, value) = Self::params_report(&a);
        self.emit(text, value);
        Ok(())
    }

    pub fn build(&self, lambda: f64, theta: Option<f64>, axis: Option<f64>) -> CliResult<()> {
        let lambda = finite("lambda", lambda)?;
        let theta = match (theta, axis) {
            (Some(t), _) => self.angle("theta", t)?,
            (None, Some(a)) => 2.0 * self.angle("axis", a)?,
            (None, None) => {
                return Err(CliError::Input(
                    "either --theta or --axis is required".into(),
                ))
            }
        };
        let a = TraceZeroSym2::new(lambda, theta)?;
        let (text, value) = Self::params_report(&a);
        self.emit(text, value);
        Ok(())
    }

    fn scaled_map(&self, lambda: f64, axis: f64) -> CliResult<ReflectScale> {
        let lambda = finite("lambda", lambda)?;
        let axis = self.angle("axis", axis)?;
        Ok(ReflectScale::new(lambda, axis)?)
    }

    fn start(x: f64, y: f64) -> CliResult<Point2> {
        Ok(Point2::new(finite("x", x)?, finite("y", y)?))
    }

    fn convergence_pair(&self, p: Point2, m: &ReflectScale) -> (String, Value) {
        let d = classify_convergence(p, m, Topology::Discrete, self.tol).verdict;
        let u = classify_convergence(p, m, Topology::Usual, self.tol).verdict;
        (
            format!("convergence (discrete) = {d}\nconvergence (usual) = {u}\n"),
            json!({ "Discrete": d, "Usual": u }),
        )
    }

    pub fn orbit(&self, args: OrbitArgs) -> CliResult<()> {
        let p = Self::start(args.x, args.y)?;
        let m = match (&args.from_matrix, args.lambda, args.axis) {
            (Some(entries), _, _) => {
                ReflectScale::from_trace_zero(&decompose(&matrix_arg(entries)?, self.tol)?)
            }
            (None, Some(l), Some(a)) => self.scaled_map(l, a)?,
            _ => {
                return Err(CliError::Input(
                    "give --lambda with --axis, or --from-matrix".into(),
                ))
            }
        };
        let rec = orbit(p, &m, args.iters, self.tol)?;

        let mut csv = String::with_capacity(rec.points.len() * 40 + 8);
        csv.push_str("n,x,y\n");
        for (n, q) in rec.points.iter().enumerate() {
            csv.push_str(&format!("{n},{},{}\n", g17(q.x), g17(q.y)));
        }

        let (conv_text, conv_json) = self.convergence_pair(p, &m);
        let mut text = format!(
            "lambda = {:?}\naxis = {:?}\niterations = {} of {}\ncardinality = {}\n",
            m.lambda,
            m.axis.phi(),
            rec.truncated_at,
            args.iters,
            rec.cardinality,
        );
        if let Some(r) = rec.revisit {
            text.push_str(&format!(
                "revisit = point {} equals point {}\n",
                r.index, r.earlier
            ));
        }
        text.push_str(&conv_text);
        let value = json!({
            "start": p,
            "lambda": m.lambda,
            "axis": m.axis.phi(),
            "requested": args.iters,
            "iterations": rec.truncated_at,
            "cardinality": rec.cardinality,
            "analytic": rec.analytic,
            "revisit": rec.revisit,
            "convergence": conv_json,
            "csv": args.out.as_ref().map(|p| p.display().to_string()),
            "svg": args.svg.as_ref().map(|p| p.display().to_string()),
        });

        if let Some(path) = &args.svg {
            write_file(path, &svg::render(&rec.points, m.axis))?;
        }
        match &args.out {
            Some(path) => {
                write_file(path, &csv)?;
                self.emit(text, value);
            }
            None => {
                let mut stdout = std::io::stdout().lock();
                stdout
                    .write_all(csv.as_bytes())
                    .and_then(|_| stdout.flush())
                    .map_err(|e| CliError::io("<stdout>", e))?;
                if self.json {
                    eprintln!("{value:#}");
                } else {
                    eprint!("{text}");
                }
            }
        }
        Ok(())
    }

    pub fn classify(&self, x: f64, y: f64, lambda: f64, axis: f64) -> CliResult<()> {
        let p = Self::start(x, y)?;
        let m = self.scaled_map(lambda, axis)?;
        let card = tracezero::dynamics::classify_orbit_cardinality(p, &m, self.tol);
        let stable = stable_set(p, m.lambda);
        let (conv_text, conv_json) = self.convergence_pair(p, &m);
        let text = format!("cardinality = {card}\nstable set = {stable}\n{conv_text}");
        let value = json!({
            "start": p,
            "lambda": m.lambda,
            "axis": m.axis.phi(),
            "cardinality": card,
            "stable_set": stable,
            "convergence": conv_json,
        });
        self.emit(text, value);
        Ok(())
    }

    pub fn compose(&self, alpha: f64, theta: f64, clockwise: bool) -> CliResult<()> {
        let alpha = self.angle("alpha", alpha)?;
        let theta = self.angle("theta", theta)?;
        let dir = if clockwise {
            Direction::Clockwise
        } else {
            Direction::Anticlockwise
        };
        let rot = rotation_matrix(alpha, dir);
        let refl = reflection_matrix(theta);
        let product = rot * refl;
        let gamma = compose_rotation_reflection(alpha, theta, dir);
        let expected = reflection_matrix(gamma);
        let residual = product.max_abs_diff(&expected);
        let ok = residual <= COMPOSE_RESIDUAL_LIMIT;
        let text = format!(
            "gamma = {gamma:?}\nrotation = {}\nreflection = {}\nproduct = {}\nreflection(gamma) = {}\nresidual = {residual:e} ({})\n",
            mat_text(&rot),
            mat_text(&refl),
            mat_text(&product),
            mat_text(&expected),
            if ok { "ok" } else { "exceeds 1e-12" },
        );
        let value = json!({
            "direction": dir,
            "alpha": alpha,
            "theta": theta,
            "gamma": gamma,
            "rotation": mat_json(&rot),
            "reflection": mat_json(&refl),
            "product": mat_json(&product),
            "composed": mat_json(&expected),
            "residual": residual,
            "within_limit": ok,
        });
        self.emit(text, value);
        Ok(())
    }

    pub fn psym(&self, file: &Path) -> CliResult<()> {
        let contents = fs::read_to_string(file).map_err(|e| CliError::io(file, e))?;
        let a = parse_sym_matrix(&contents, self.tol)?;
        let (text, value) = match psym_check(&a, self.tol) {
            PsymCheck::Member { scalar } => (
                format!("n = {}\nmember = true\nscalar = {scalar:?}\n", a.dim()),
                json!({ "n": a.dim(), "member": true, "scalar": scalar }),
            ),
            PsymCheck::NonMember { witness, pairing } => (
                format!(
                    "n = {}\nmember = false\npairing = {pairing:?}\nwitness =\n{witness}\n",
                    a.dim()
                ),
                json!({
                    "n": a.dim(),
                    "member": false,
                    "pairing": pairing,
                    "witness": witness.to_rows(),
                }),
            ),
        };
        self.emit(text, value);
        Ok(())
    }

    pub fn ortho_classify(&self, entries: &[f64]) -> CliResult<()> {
        let o = classify_orthogonal(&matrix_arg(entries)?, self.tol)?;
        let kind = match o {
            Orthogonal2::Rotation { .. } => "Rotation",
            Orthogonal2::Reflection { .. } => "Reflection",
        };
        let text = format!(
            "kind = {kind}\nangle = {:?}\ndet = {:?}\n",
            o.angle(),
            o.det()
        );
        let value = json!({ "kind": kind, "angle": o.angle(), "det": o.det(), "orthogonal": o });
        self.emit(text, value);
        Ok(())
    }
}

/// Whitespace-separated `n` followed by `n²` row-major entries.
pub fn parse_sym_matrix(contents: &str, tol: Tolerance) -> CliResult<SymMatN> {
    let mut tokens = contents.split_whitespace();
    let first = tokens
        .next()
        .ok_or_else(|| CliError::Input("empty matrix file".into()))?;
    let n: usize = first
        .parse()
        .map_err(|_| CliError::Input(format!("dimension must be an integer, got {first:?}")))?;
    if !(2..=MAX_PSYM_DIM).contains(&n) {
        return Err(CliError::Input(format!(
            "dimension must be between 2 and {MAX_PSYM_DIM}, got {n}"
        )));
    }
    let entries = tokens
        .map(|t| {
            t.parse::<f64>()
                .map_err(|_| CliError::Input(format!("not a number: {t:?}")))
                .and_then(|v| finite("entry", v))
        })
        .collect::<CliResult<Vec<f64>>>()?;
    if entries.len() != n * n {
        return Err(CliError::Input(format!(
            "expected {} entries for n = {n}, found {}",
            n * n,
            entries.len()
        )));
    }
    Ok(SymMatN::from_row_major(n, &entries, tol)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_valid_file() {
        let a = parse_sym_matrix("2\n1 2\n2 3\n", Tolerance::default()).unwrap();
        assert_eq!(a.get(0, 1), 2.0);
    }

    #[test]
    fn rejects_bad_files() {
        let tol = Tolerance::default();
        for bad in [
            "",
            "1\n1",
            "65",
            "2.5 1 0 0 1",
            "2 1 0 0",
            "2 1 0 0 1 9",
            "2 1 x 0 1",
            "2 1 2 3 4",
            "2 1 0 0 nan",
        ] {
            assert!(
                matches!(
                    parse_sym_matrix(bad, tol),
                    Err(CliError::Input(_)) | Err(CliError::Library(_))
                ),
                "{bad:?}"
            );
        }
    }
}
