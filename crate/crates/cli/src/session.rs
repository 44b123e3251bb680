//! Named bindings and command execution.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use superring_core::engine::{with_deadline, Limits};
use superring_core::fractional::{frac_inverse, Inverse};
use superring_core::regularity::Regularity;
use superring_core::text::{format_poly, is_identifier, parse_expr_at, parse_expr_list_at};
use superring_core::{
    annihilator, contained_at, dvr_check_local, frac_equal, frac_from_ideal, frac_product,
    is_dedekind, is_invertible, is_regular_at, is_strong_superdomain, is_superdomain,
    is_zerodivisor, ksdim, make_ring, odd_ksdim, regular_defect_locus, superreduce, Config, Error,
    Field, FractionalSuperideal, MaximalIdealPoint, Ring, SuperIdeal, SuperPoly, Tri,
};

use crate::output::{CliError, Outcome};
use crate::script::{find_top_level, matching_close, split_args, split_commands, Command};

type CliResult<T> = Result<T, CliError>;

/// Session-wide settings.
#[derive(Debug, Clone)]
pub struct Settings {
    pub field: Field,
    pub max_degree: u32,
    pub max_odd: usize,
    pub timeout: Option<Duration>,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            field: Field::Rational,
            max_degree: Limits::default().max_degree,
            max_odd: superring_core::ring::DEFAULT_MAX_ODD,
            timeout: None,
        }
    }
}

#[derive(Debug, Default)]
pub struct Session {
    pub settings: Settings,
    rings: BTreeMap<String, Ring>,
    ideals: BTreeMap<String, SuperIdeal>,
    fracs: BTreeMap<String, FractionalSuperideal>,
    elems: BTreeMap<String, (Ring, SuperPoly)>,
    active: Option<String>,
    definitions: Vec<String>,
}

enum Frac {
    Named(String, FractionalSuperideal),
    Anon(FractionalSuperideal),
}

impl Frac {
    fn value(&self) -> &FractionalSuperideal {
        match self {
            Frac::Named(_, f) | Frac::Anon(f) => f,
        }
    }

    fn label(&self) -> String {
        match self {
            Frac::Named(n, _) => n.clone(),
            Frac::Anon(f) => f.to_string(),
        }
    }
}

fn user(cmd: &Command, idx: usize, msg: impl Into<String>) -> CliError {
    let (line, col) = cmd.pos_at(idx);
    CliError::User {
        line,
        col,
        message: msg.into(),
    }
}

fn parse_field(s: &str, default: Field) -> Result<Field, Error> {
    let t = s.trim();
    let prime = |p: &str| -> Result<Field, Error> {
        let v: u64 = p
            .trim()
            .parse()
            .map_err(|_| Error::InvalidField(s.to_string()))?;
        Field::prime(v)
    };
    match t {
        "" | "k" => Ok(default),
        "Q" | "QQ" | "q" => Ok(Field::Rational),
        _ => {
            if let Some(p) = t.strip_prefix("fp:") {
                prime(p)
            } else if let Some(p) = t.strip_prefix("GF(").and_then(|r| r.strip_suffix(')')) {
                prime(p)
            } else {
                Err(Error::InvalidField(s.to_string()))
            }
        }
    }
}

/// Parses a `--field` value: `q` or `fp:<p>`.
pub fn parse_field_option(s: &str) -> Result<Field, Error> {
    parse_field(s, Field::Rational)
}

fn tri_of(b: bool) -> Tri {
    Tri::from_bool(b)
}

impl Session {
    pub fn new(settings: Settings) -> Session {
        Session {
            settings,
            ..Session::default()
        }
    }

    fn limits(&self) -> Limits {
        Limits {
            max_degree: self.settings.max_degree,
            deadline: None,
        }
    }

    /// Runs every command of a script, stopping at the first error.
    pub fn run_script(
        &mut self,
        src: &str,
        mut sink: impl FnMut(&Outcome),
    ) -> Result<(), CliError> {
        for cmd in split_commands(src) {
            let out = self.execute(&cmd)?;
            sink(&out);
        }
        Ok(())
    }

    /// Executes one command under the configured timeout.
    pub fn execute(&mut self, cmd: &Command) -> CliResult<Outcome> {
        let start = Instant::now();
        let deadline = self.settings.timeout.map(|t| start + t);
        let mut out = with_deadline(deadline, || self.dispatch(cmd))?;
        out.timing_ms = start.elapsed().as_secs_f64() * 1000.0;
        Ok(out)
    }

    fn dispatch(&mut self, cmd: &Command) -> CliResult<Outcome> {
        let (verb, rest_at) = cmd.verb();
        let verb = verb.to_string();
        let rest = cmd.text[rest_at..].trim_end().to_string();
        let v = verb.as_str();
        match v {
            "ring" => self.define_ring(cmd, rest_at, &rest),
            "ideal" => self.define_ideal(cmd, rest_at, &rest),
            "frac" => self.define_frac(cmd, rest_at, &rest),
            "elem" => self.define_elem(cmd, rest_at, &rest),
            "use" => {
                if !self.rings.contains_key(rest.as_str()) {
                    return Err(user(cmd, rest_at, format!("no ring named `{rest}`")));
                }
                self.active = Some(rest.clone());
                self.definitions.push(cmd.text.clone());
                Ok(Outcome::value(v, rest))
            }
            "ksdim" => {
                let r = self.ring_arg(cmd, rest_at, &rest)?;
                let dim = ksdim(&r)?;
                let mut out = Outcome::value(v, dim.to_string());
                if let (_, Some(w)) = odd_ksdim(&r)? {
                    let names: Vec<String> = w
                        .subset
                        .indices()
                        .iter()
                        .map(|&i| r.odd_names()[i - 1].clone())
                        .collect();
                    out = out.with_detail(format!("odd parameters: {}", names.join(", ")));
                }
                Ok(out)
            }
            "superreduce" => {
                let r = self.ring_arg(cmd, rest_at, &rest)?;
                Ok(Outcome::value(v, superreduce(&r).to_string()))
            }
            "is_superdomain" => {
                let r = self.ring_arg(cmd, rest_at, &rest)?;
                Ok(verdict_outcome(v, &r, is_superdomain(&r)?))
            }
            "is_strong" => {
                let (r, probes) = if rest.starts_with('(') {
                    let r = self.active_ring(cmd, rest_at)?;
                    let p = self.expr_list(cmd, rest_at, &rest, &r)?;
                    (r, p)
                } else {
                    (self.ring_arg(cmd, rest_at, &rest)?, Vec::new())
                };
                Ok(verdict_outcome(v, &r, is_strong_superdomain(&r, &probes)?))
            }
            "is_zerodivisor" => {
                let (r, f) = self.element_arg(cmd, rest_at, &rest)?;
                let zd = is_zerodivisor(&r, &f)?;
                let mut out = Outcome::verdict(v, tri_of(zd));
                if zd {
                    let ann = annihilator(&r, &f)?;
                    if let Some(g) = ann.gens().first() {
                        out = out.with_witness(format!("({})*({}) = 0", r.format(&f), r.format(g)));
                    }
                }
                Ok(out)
            }
            "is_prime" | "is_maximal" => {
                let (_, i) = self.ideal_arg(cmd, rest_at, &rest)?;
                let verdict = if v == "is_prime" {
                    i.is_prime()?
                } else {
                    i.is_maximal()?
                };
                Ok(verdict_outcome(v, i.ring(), verdict))
            }
            "is_regular_at" => {
                let (r, m) = self.point_arg(cmd, rest_at, &rest)?;
                let rep = is_regular_at(&r, &m)?;
                let tri = match rep.verdict {
                    Regularity::Regular => Tri::True,
                    Regularity::NotRegular => Tri::False,
                    Regularity::Unknown => Tri::Unknown,
                };
                let mut out = Outcome::verdict(v, tri).with_detail(rep.verdict.to_string());
                if let Some(w) = &rep.witness {
                    out = out.with_witness(r.format(w));
                }
                for reason in rep.reasons {
                    out = out.with_detail(reason);
                }
                Ok(out)
            }
            "defect_locus" => {
                let r = self.ring_arg(cmd, rest_at, &rest)?;
                let d = regular_defect_locus(&r)?;
                let gens: Vec<String> = d
                    .ideal
                    .gens()
                    .iter()
                    .map(|g| format_poly(g, r.even_names()))
                    .collect();
                let shown = if gens.is_empty() {
                    "(0)".to_string()
                } else {
                    format!("({})", gens.join(", "))
                };
                Ok(Outcome::value(v, shown).with_detail(if d.certified {
                    "certified"
                } else {
                    "uncertified"
                }))
            }
            "is_dedekind" => {
                let r = self.ring_arg(cmd, rest_at, &rest)?;
                let rep = is_dedekind(&r)?;
                let mut out = Outcome::verdict(v, rep.verdict);
                if rep.verdict != Tri::True {
                    if let Some(first) = rep.reasons.first() {
                        out = out.with_witness(first.clone());
                    }
                }
                for reason in rep.reasons.iter().skip(1) {
                    out = out.with_detail(reason.clone());
                }
                Ok(out)
            }
            "dvr_at" => {
                let (r, m) = self.point_arg(cmd, rest_at, &rest)?;
                Ok(verdict_outcome(v, &r, dvr_check_local(&r, &m)?))
            }
            "inv" => {
                let (bind, at, body) = split_binding(&rest, rest_at);
                let m = self.frac_arg(cmd, at, body)?;
                match frac_inverse(m.value())? {
                    Inverse::Found { inverse, unit } => {
                        let shown = inverse.to_string();
                        if let Some(name) = bind {
                            self.fracs.insert(name.clone(), inverse);
                        }
                        let r = m.value().ring().clone();
                        Ok(Outcome::value(v, shown)
                            .with_detail(format!("via the non-zerodivisor {}", r.format(&unit))))
                    }
                    Inverse::NoUnitCandidate => Ok(Outcome::value(v, "NoUnitCandidate")),
                }
            }
            "is_invertible" => {
                let m = self.frac_arg(cmd, rest_at, &rest)?;
                let rep = is_invertible(m.value())?;
                let mut out = Outcome::verdict(v, tri_of(rep.value));
                let label = m.label();
                if rep.no_unit_candidate {
                    out = out.with_witness("NoUnitCandidate");
                } else if let Some(w) = rep.witness {
                    let f = m.value();
                    let same = f.den == f.ring().one() && w.equals(&f.num)?;
                    let rhs = if same { label.clone() } else { w.to_string() };
                    if !rep.value {
                        out = out.with_witness(format!("{label}^{{-1}}{label} = {rhs}"));
                    }
                }
                Ok(out)
            }
            "prod" => {
                let (bind, at, body) = split_binding(&rest, rest_at);
                let args = split_args(body);
                if args.len() != 2 {
                    return Err(user(cmd, at, "prod expects two operands"));
                }
                let a = self.frac_arg(cmd, at + args[0].0, args[0].1)?;
                let b = self.frac_arg(cmd, at + args[1].0, args[1].1)?;
                let p = frac_product(a.value(), b.value())?;
                let shown = p.to_string();
                if let Some(name) = bind {
                    self.fracs.insert(name, p);
                }
                Ok(Outcome::value(v, shown))
            }
            "equal" => {
                let args = split_args(&rest);
                if args.len() != 2 {
                    return Err(user(cmd, rest_at, "equal expects two operands"));
                }
                let a = self.frac_arg(cmd, rest_at + args[0].0, args[0].1)?;
                let b = self.frac_arg(cmd, rest_at + args[1].0, args[1].1)?;
                Ok(Outcome::verdict(
                    v,
                    tri_of(frac_equal(a.value(), b.value())?),
                ))
            }
            "contained_at" => {
                let args = split_args(&rest);
                if args.len() != 3 {
                    return Err(user(cmd, rest_at, "contained_at expects three ideals"));
                }
                let (_, b) = self.ideal_arg(cmd, rest_at + args[0].0, args[0].1)?;
                let (_, c) = self.ideal_arg(cmd, rest_at + args[1].0, args[1].1)?;
                let (_, p) = self.ideal_arg(cmd, rest_at + args[2].0, args[2].1)?;
                Ok(Outcome::verdict(v, tri_of(contained_at(&b, &c, &p)?)))
            }
            "nf" => {
                let (expr_part, ideal_part) = match rest.find(" mod ") {
                    Some(k) => (&rest[..k], Some((k + 5, &rest[k + 5..]))),
                    None => (rest.as_str(), None),
                };
                let (r, f) = self.element_arg(cmd, rest_at, expr_part.trim())?;
                let nf = match ideal_part {
                    Some((k, s)) => {
                        let (_, i) = self.ideal_arg(cmd, rest_at + k, s.trim())?;
                        i.normal_form(&f)?
                    }
                    None => r.reduce(&f)?,
                };
                Ok(Outcome::value(v, r.format(&nf)))
            }
            "gb" => {
                let (_, i) = self.ideal_arg(cmd, rest_at, &rest)?;
                let r = i.ring();
                let elems: Vec<String> = i
                    .basis()
                    .elems()
                    .iter()
                    .map(|e| r.format(&r.superpoly_of(e)))
                    .collect();
                Ok(Outcome::value(v, format!("[{}]", elems.join(", "))))
            }
            "show" => self.show(cmd, rest_at, &rest),
            "save" => {
                if rest.is_empty() {
                    return Err(user(cmd, rest_at, "save expects a file name"));
                }
                let mut text = self.definitions.join("\n");
                text.push('\n');
                std::fs::write(&rest, text).map_err(|e| CliError::Io(e.to_string()))?;
                Ok(Outcome::value(v, rest))
            }
            "load" => {
                let src =
                    std::fs::read_to_string(&rest).map_err(|e| CliError::Io(e.to_string()))?;
                let mut n = 0;
                self.run_script(&src, |_| n += 1)?;
                Ok(Outcome::value(v, format!("{n} commands")))
            }
            _ => Err(user(cmd, 0, format!("unknown command `{v}`"))),
        }
    }

    fn show(&self, cmd: &Command, at: usize, rest: &str) -> CliResult<Outcome> {
        if rest.is_empty() {
            let mut lines = Vec::new();
            for (n, r) in &self.rings {
                let mark = if self.active.as_deref() == Some(n) {
                    "*"
                } else {
                    ""
                };
                lines.push(format!("ring {n}{mark} = {r}"));
            }
            for (n, i) in &self.ideals {
                lines.push(format!("ideal {n} = {i}"));
            }
            for (n, f) in &self.fracs {
                lines.push(format!("frac {n} = {f}"));
            }
            for (n, (r, e)) in &self.elems {
                lines.push(format!("elem {n} = {}", r.format(e)));
            }
            return Ok(Outcome::value("show", lines.join("\n")));
        }
        if let Some(r) = self.rings.get(rest) {
            return Ok(Outcome::value("show", r.to_string()));
        }
        if let Some(i) = self.ideals.get(rest) {
            return Ok(Outcome::value("show", i.to_string()));
        }
        if let Some(f) = self.fracs.get(rest) {
            return Ok(Outcome::value("show", f.to_string()));
        }
        if let Some((r, e)) = self.elems.get(rest) {
            return Ok(Outcome::value("show", r.format(e)));
        }
        Err(user(cmd, at, format!("nothing named `{rest}`")))
    }

    fn active_ring(&self, cmd: &Command, at: usize) -> CliResult<Ring> {
        self.active
            .as_ref()
            .and_then(|n| self.rings.get(n))
            .cloned()
            .ok_or_else(|| user(cmd, at, "no active ring; define one with `ring`"))
    }

    fn ring_arg(&self, cmd: &Command, at: usize, rest: &str) -> CliResult<Ring> {
        if rest.is_empty() {
            return self.active_ring(cmd, at);
        }
        self.rings
            .get(rest)
            .cloned()
            .ok_or_else(|| user(cmd, at, format!("no ring named `{rest}`")))
    }

    fn expr(&self, cmd: &Command, at: usize, s: &str, r: &Ring) -> CliResult<SuperPoly> {
        let (line, col) = cmd.pos_at(at);
        Ok(parse_expr_at(s, r, line, col)?)
    }

    /// `(a, b, ..)` or a bare list.
    fn expr_list(&self, cmd: &Command, at: usize, s: &str, r: &Ring) -> CliResult<Vec<SuperPoly>> {
        let t = s.trim();
        let lead = s.len() - s.trim_start().len();
        if t.starts_with('(') && matching_close(t, 0) == Some(t.len() - 1) {
            let (line, col) = cmd.pos_at(at + lead + 1);
            return Ok(parse_expr_list_at(&t[1..t.len() - 1], r, line, col)?);
        }
        let (line, col) = cmd.pos_at(at + lead);
        Ok(parse_expr_list_at(t, r, line, col)?)
    }

    fn element_arg(&self, cmd: &Command, at: usize, s: &str) -> CliResult<(Ring, SuperPoly)> {
        if let Some((r, e)) = self.elems.get(s) {
            return Ok((r.clone(), e.clone()));
        }
        let r = self.active_ring(cmd, at)?;
        let f = self.expr(cmd, at, s, &r)?;
        Ok((r, f))
    }

    fn ideal_arg(&self, cmd: &Command, at: usize, s: &str) -> CliResult<(String, SuperIdeal)> {
        if let Some(i) = self.ideals.get(s) {
            return Ok((s.to_string(), i.clone()));
        }
        if s.starts_with('(') {
            let r = self.active_ring(cmd, at)?;
            let gens = self.expr_list(cmd, at, s, &r)?;
            let i = SuperIdeal::new(&r, &gens)?;
            return Ok((i.to_string(), i));
        }
        Err(user(cmd, at, format!("no ideal named `{s}`")))
    }

    fn frac_arg(&self, cmd: &Command, at: usize, s: &str) -> CliResult<Frac> {
        if let Some(f) = self.fracs.get(s) {
            return Ok(Frac::Named(s.to_string(), f.clone()));
        }
        if let Some(i) = self.ideals.get(s) {
            return Ok(Frac::Named(s.to_string(), frac_from_ideal(i)));
        }
        if s.starts_with('(') {
            let r = self.active_ring(cmd, at)?;
            return Ok(Frac::Anon(self.frac_literal(cmd, at, s, &r)?));
        }
        Err(user(cmd, at, format!("no fractional ideal named `{s}`")))
    }

    fn frac_literal(
        &self,
        cmd: &Command,
        at: usize,
        s: &str,
        r: &Ring,
    ) -> CliResult<FractionalSuperideal> {
        let close = matching_close(s, 0).ok_or_else(|| user(cmd, at, "unbalanced parentheses"))?;
        let gens = self.expr_list(cmd, at, &s[..=close], r)?;
        let tail = &s[close + 1..];
        let den = match tail.trim_start().strip_prefix('/') {
            Some(d) => {
                let off = close + 1 + (tail.len() - tail.trim_start().len()) + 1;
                self.expr(cmd, at + off, d, r)?
            }
            None if tail.trim().is_empty() => r.one(),
            None => return Err(user(cmd, at + close + 1, "expected `/` and a denominator")),
        };
        Ok(superring_core::frac_make(r, &gens, &den)?)
    }

    fn point_arg(&self, cmd: &Command, at: usize, s: &str) -> CliResult<(Ring, MaximalIdealPoint)> {
        if s.starts_with('[') {
            let r = self.active_ring(cmd, at)?;
            let close = matching_close(s, 0).ok_or_else(|| user(cmd, at, "unbalanced brackets"))?;
            let (line, col) = cmd.pos_at(at + 1);
            let coords = parse_expr_list_at(&s[1..close], &r, line, col)?;
            let mut pt = Vec::new();
            for c in coords {
                if !c.is_body_only() || !c.body().is_constant() {
                    return Err(user(cmd, at, "point coordinates must be constants"));
                }
                pt.push(
                    c.leading_coeff()
                        .cloned()
                        .unwrap_or_else(|| r.field().zero()),
                );
            }
            let m = MaximalIdealPoint::from_coords(&r, &pt)?;
            return Ok((r, m));
        }
        let (_, i) = self.ideal_arg(cmd, at, s)?;
        let m = MaximalIdealPoint::from_ideal(&i)?;
        Ok((i.ring().clone(), m))
    }

    fn binding<'a>(
        &self,
        cmd: &Command,
        at: usize,
        rest: &'a str,
    ) -> CliResult<(String, usize, &'a str)> {
        let eq = find_top_level(rest, '=')
            .ok_or_else(|| user(cmd, at, "expected `<name> = <definition>`"))?;
        let name = rest[..eq].trim();
        if !is_identifier(name) {
            return Err(user(cmd, at, format!("invalid name `{name}`")));
        }
        let after = &rest[eq + 1..];
        let lead = after.len() - after.trim_start().len();
        Ok((name.to_string(), at + eq + 1 + lead, after.trim()))
    }

    fn define_ring(&mut self, cmd: &Command, at: usize, rest: &str) -> CliResult<Outcome> {
        let (name, at, rhs) = self.binding(cmd, at, rest)?;
        let open = rhs
            .find('[')
            .ok_or_else(|| user(cmd, at, "expected `<field>[evens | odds]`"))?;
        let field = parse_field(&rhs[..open], self.settings.field)?;
        let close =
            matching_close(rhs, open).ok_or_else(|| user(cmd, at + open, "unclosed `[`"))?;
        let inner = &rhs[open + 1..close];
        let (evens, odds) = match inner.find('|') {
            Some(k) => (&inner[..k], &inner[k + 1..]),
            None => (inner, ""),
        };
        let names = |s: &str| -> CliResult<Vec<String>> {
            let mut out = Vec::new();
            for n in s.split(',').map(str::trim).filter(|n| !n.is_empty()) {
                if !is_identifier(n) {
                    return Err(user(cmd, at + open, format!("invalid variable name `{n}`")));
                }
                out.push(n.to_string());
            }
            Ok(out)
        };
        let evens = names(evens)?;
        let odds = names(odds)?;
        let mut all: Vec<&String> = evens.iter().chain(odds.iter()).collect();
        all.sort();
        if all.windows(2).any(|w| w[0] == w[1]) {
            return Err(user(cmd, at + open, "duplicate variable name"));
        }
        let er: Vec<&str> = evens.iter().map(|s| s.as_str()).collect();
        let or: Vec<&str> = odds.iter().map(|s| s.as_str()).collect();
        let config = Config {
            limits: self.limits(),
            max_odd: self.settings.max_odd,
        };
        let free = make_ring(field, &er, &or, &[], config.clone())?;
        let tail = &rhs[close + 1..];
        let gens = match tail.trim_start().strip_prefix('/') {
            Some(g) => {
                let off = close + 1 + (tail.len() - tail.trim_start().len()) + 1;
                self.expr_list(cmd, at + off, g, &free)?
            }
            None if tail.trim().is_empty() => Vec::new(),
            None => return Err(user(cmd, at + close + 1, "expected `/ (generators)`")),
        };
        let ring = make_ring(field, &er, &or, &gens, config)?;
        let shown = ring.to_string();
        self.rings.insert(name.clone(), ring);
        self.active = Some(name);
        self.definitions.push(cmd.text.clone());
        Ok(Outcome::value("ring", shown))
    }

    fn define_ideal(&mut self, cmd: &Command, at: usize, rest: &str) -> CliResult<Outcome> {
        let (name, at, rhs) = self.binding(cmd, at, rest)?;
        let r = self.active_ring(cmd, at)?;
        let gens = self.expr_list(cmd, at, rhs, &r)?;
        let i = SuperIdeal::new(&r, &gens)?;
        let shown = i.to_string();
        self.ideals.insert(name, i);
        self.definitions.push(cmd.text.clone());
        Ok(Outcome::value("ideal", shown))
    }

    fn define_frac(&mut self, cmd: &Command, at: usize, rest: &str) -> CliResult<Outcome> {
        let (name, at, rhs) = self.binding(cmd, at, rest)?;
        let r = self.active_ring(cmd, at)?;
        if !rhs.starts_with('(') {
            return Err(user(
                cmd,
                at,
                "expected `(generators)` or `(generators)/denominator`",
            ));
        }
        let f = self.frac_literal(cmd, at, rhs, &r)?;
        let shown = f.to_string();
        self.fracs.insert(name, f);
        self.definitions.push(cmd.text.clone());
        Ok(Outcome::value("frac", shown))
    }

    fn define_elem(&mut self, cmd: &Command, at: usize, rest: &str) -> CliResult<Outcome> {
        let (name, at, rhs) = self.binding(cmd, at, rest)?;
        let r = self.active_ring(cmd, at)?;
        let f = r.reduce(&self.expr(cmd, at, rhs, &r)?)?;
        let shown = r.format(&f);
        self.elems.insert(name, (r, f));
        self.definitions.push(cmd.text.clone());
        Ok(Outcome::value("elem", shown))
    }
}

/// Splits an optional `name =` prefix off a result-producing command.
fn split_binding(rest: &str, at: usize) -> (Option<String>, usize, &str) {
    if let Some(eq) = find_top_level(rest, '=') {
        let name = rest[..eq].trim();
        if is_identifier(name) {
            let after = &rest[eq + 1..];
            let lead = after.len() - after.trim_start().len();
            return (Some(name.to_string()), at + eq + 1 + lead, after.trim());
        }
    }
    (None, at, rest)
}

fn verdict_outcome(verb: &str, r: &Ring, v: superring_core::Verdict) -> Outcome {
    let mut out = Outcome::verdict(verb, v.value).with_detail(v.reason);
    if let Some(w) = &v.witness {
        out = out.with_witness(r.format(w));
    }
    out
}
