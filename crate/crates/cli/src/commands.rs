use std::fmt;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::ValueEnum;
use num_bigint::BigUint;

use ltm_core::char_functions::{
    count_aut_orbits, count_double_cosets_within, count_gl_orbits_within,
    facet_automorphism_group_within,
};
use ltm_core::classification::{
    classify_surface_within, compute_h, count_equivariant_classes_surface, H1Model,
};
use ltm_core::cycle_colorings::{
    burnside_orbit_count, combined_group, count_closed_form, count_double_cosets_closed_form_c,
    count_orbits_closed_form_b, count_orbits_closed_form_b_scolor, dihedral_group,
    enumerate_colorings_within, CycleColoring,
};
use ltm_core::euler_orient::{euler_2d, euler_2d_from, euler_total, FaceEulerData};
use ltm_core::orbit_space::SurfaceWithBoundary;
use ltm_core::quotient_complex::{
    build_small_cover, connected_components, homeomorphism_census, surface_type,
};
use ltm_core::Budget;

use crate::error::CliError;
use crate::space::Space;
use crate::table::{Cell, Format, Table};

pub struct Context<'a, W: Write> {
    pub format: Format,
    pub budget: Budget,
    pub out: &'a mut W,
}

impl<W: Write> Context<'_, W> {
    fn emit(&mut self, table: &Table) -> Result<(), CliError> {
        table.write(self.format, self.out)?;
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Sequence {
    /// proper colorings of the m-arc circle
    #[value(name = "A", alias = "a")]
    A,
    /// colorings up to rotation and reflection
    #[value(name = "B", alias = "b")]
    B,
    /// colorings up to rotation, reflection and color permutation
    #[value(name = "C", alias = "c")]
    C,
}

/// Inclusive range `m..=max`, checking `2 <= m <= max`.
fn range(m: usize, max: Option<usize>) -> Result<std::ops::RangeInclusive<usize>, CliError> {
    let max = max.unwrap_or(m);
    if m < 2 {
        return Err(CliError::usage(format!("--m must be at least 2, got {m}")));
    }
    if max < m {
        return Err(CliError::usage(format!("--max {max} is below --m {m}")));
    }
    Ok(m..=max)
}

pub fn count<W: Write>(
    ctx: &mut Context<W>,
    which: Sequence,
    m: usize,
    s: usize,
    max: Option<usize>,
) -> Result<(), CliError> {
    if which == Sequence::C && s != 3 {
        return Err(CliError::usage("C is defined for 3 colors only"));
    }
    let name = match which {
        Sequence::A => "A",
        Sequence::B => "B",
        Sequence::C => "C",
    };
    let mut table = Table::new(vec!["m", "s", name]);
    for m in range(m, max)? {
        let (mu, su) = (m as u64, s as u64);
        let value: BigUint = match which {
            Sequence::A => count_closed_form(mu, su)?,
            Sequence::B if s == 3 => count_orbits_closed_form_b(mu)?,
            Sequence::B => count_orbits_closed_form_b_scolor(mu, su)?,
            Sequence::C => count_double_cosets_closed_form_c(mu)?,
        };
        table.push(vec![Cell::int(m), Cell::int(s), Cell::int(value)]);
    }
    ctx.emit(&table)
}

pub fn oracle<W: Write>(
    ctx: &mut Context<W>,
    m: usize,
    max: Option<usize>,
) -> Result<(), CliError> {
    let mut table = Table::new(vec![
        "m",
        "A_brute",
        "A_closed",
        "B_burnside",
        "B_closed",
        "C_burnside",
        "C_closed",
        "match",
    ]);
    let mut failures = Vec::new();
    for m in range(m, max)? {
        let colorings = enumerate_colorings_within(m, 3, &ctx.budget)?;
        let a_brute = BigUint::from(colorings.len());
        let a_closed = count_closed_form(m as u64, 3)?;
        let b_brute = BigUint::from(burnside_orbit_count(&colorings, &dihedral_group(m)?)?);
        let b_closed = count_orbits_closed_form_b(m as u64)?;
        let c_brute = BigUint::from(burnside_orbit_count(&colorings, &combined_group(m, 3)?)?);
        let c_closed = count_double_cosets_closed_form_c(m as u64)?;
        let ok = a_brute == a_closed && b_brute == b_closed && c_brute == c_closed;
        if !ok {
            failures.push(m);
        }
        table.push(vec![
            Cell::int(m),
            Cell::int(a_brute),
            Cell::int(a_closed),
            Cell::int(b_brute),
            Cell::int(b_closed),
            Cell::int(c_brute),
            Cell::int(c_closed),
            Cell::Bool(ok),
        ]);
    }
    ctx.emit(&table)?;
    if failures.is_empty() {
        Ok(())
    } else {
        Err(CliError::mismatch(format!(
            "closed forms disagree with brute force at m = {failures:?}"
        )))
    }
}

pub fn charfns<W: Write>(
    ctx: &mut Context<W>,
    space: &Space,
    n: Option<usize>,
) -> Result<(), CliError> {
    let p = space.build()?;
    let n = n.unwrap_or(p.dim());
    let report = count_gl_orbits_within(&p, n, &ctx.budget)?;
    let aut = facet_automorphism_group_within(&p, &ctx.budget)?;
    let aut_orbits = count_aut_orbits(&p, n, &ctx.budget)?;
    let double = count_double_cosets_within(&p, n, &ctx.budget)?;
    let mut table = Table::new(vec![
        "space",
        "n",
        "functions",
        "gl_orbits",
        "free",
        "aut_order",
        "aut_orbits",
        "double_cosets",
    ]);
    table.push(vec![
        Cell::text(space.to_string()),
        Cell::int(n),
        Cell::int(report.functions),
        Cell::int(report.orbits),
        Cell::Bool(report.free),
        Cell::int(aut.len()),
        Cell::int(aut_orbits),
        Cell::int(double),
    ]);
    ctx.emit(&table)
}

/// Surface parameters for `euler` when no `--space` is given.
pub struct SurfaceParams {
    pub genus: usize,
    pub orientable: bool,
    pub m: usize,
}

pub fn euler<W: Write>(
    ctx: &mut Context<W>,
    space: Option<&Space>,
    surface: Option<SurfaceParams>,
) -> Result<(), CliError> {
    let mut table = Table::new(vec![
        "space",
        "chi_q",
        "m",
        "chi_total",
        "chi_formula",
        "agree",
    ]);
    let (label, chi_q, m, total, formula) = match (space, surface) {
        (Some(space), None) => {
            let p = space.build()?;
            let total = euler_total(&p, &FaceEulerData::polytope(&p))?;
            let m = space.boundary_vertices();
            let formula = m.map(|m| euler_2d_from(1, m));
            (space.to_string(), m.map(|_| 1), m, total, formula)
        }
        (None, Some(s)) => {
            let q = SurfaceWithBoundary::new(s.orientable, s.genus, s.m)?;
            let p = q.face_poset()?;
            let total = euler_total(&p, &FaceEulerData::surface(&p, q.euler())?)?;
            let kind = if s.orientable {
                "orientable"
            } else {
                "nonorientable"
            };
            (
                format!("surface:{kind}:g{}", s.genus),
                Some(q.euler()),
                Some(s.m),
                total,
                Some(euler_2d(&q)),
            )
        }
        _ => {
            return Err(CliError::usage(
                "give either --space or --m with --genus/--orientable",
            ))
        }
    };
    let agree = formula.map(|f| f == total);
    table.push(vec![
        Cell::text(label),
        chi_q.map_or(Cell::Empty, Cell::int),
        m.map_or(Cell::Empty, Cell::int),
        Cell::int(total),
        formula.map_or(Cell::Empty, Cell::int),
        agree.map_or(Cell::Empty, Cell::Bool),
    ]);
    ctx.emit(&table)?;
    if agree == Some(false) {
        return Err(CliError::mismatch(
            "the two Euler characteristic routes disagree",
        ));
    }
    Ok(())
}

/// The surface `Q` for `classify`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SurfaceArg {
    Disk,
    Rp2,
    Torus,
    Custom(PathBuf),
}

impl FromStr for SurfaceArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "disk" => Ok(SurfaceArg::Disk),
            "rp2" => Ok(SurfaceArg::Rp2),
            "torus" => Ok(SurfaceArg::Torus),
            _ => match s.strip_prefix("custom:") {
                Some(path) if !path.is_empty() => Ok(SurfaceArg::Custom(PathBuf::from(path))),
                _ => Err(format!(
                    "unknown surface {s:?}; use disk, rp2, torus or custom:FILE"
                )),
            },
        }
    }
}

impl fmt::Display for SurfaceArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceArg::Disk => f.write_str("disk"),
            SurfaceArg::Rp2 => f.write_str("rp2"),
            SurfaceArg::Torus => f.write_str("torus"),
            SurfaceArg::Custom(p) => write!(f, "custom:{}", p.display()),
        }
    }
}

impl SurfaceArg {
    fn model(&self) -> Result<H1Model, CliError> {
        Ok(match self {
            SurfaceArg::Disk => H1Model::disk(2)?,
            SurfaceArg::Rp2 => H1Model::projective_plane_minus_disk(2)?,
            SurfaceArg::Torus => H1Model::torus_minus_disk(2)?,
            SurfaceArg::Custom(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
                H1Model::parse(&text, 2)?
            }
        })
    }

    /// Only the boundary matters to the counts; a custom surface is given
    /// the shape of a disk with the same boundary.
    fn with_boundary(&self, m: usize) -> Result<SurfaceWithBoundary, CliError> {
        Ok(match self {
            SurfaceArg::Rp2 => SurfaceWithBoundary::projective_plane_minus_disk(m)?,
            SurfaceArg::Torus => SurfaceWithBoundary::torus_minus_disk(m)?,
            SurfaceArg::Disk | SurfaceArg::Custom(_) => SurfaceWithBoundary::disk(m)?,
        })
    }
}

pub fn classify<W: Write>(
    ctx: &mut Context<W>,
    surface: &SurfaceArg,
    m: usize,
    max: Option<usize>,
    full: bool,
) -> Result<(), CliError> {
    let h1 = surface.model()?;
    let h = compute_h(&h1)?;
    let mut columns = vec!["surface", "m", "h", "B", "classes"];
    if full {
        columns.extend([
            "functions",
            "equivalence",
            "equivariant_direct",
            "weak",
            "consistent",
        ]);
    }
    let mut table = Table::new(columns);
    let mut inconsistent = Vec::new();
    for m in range(m, max)? {
        let q = surface.with_boundary(m)?;
        let mut row = vec![
            Cell::text(surface.to_string()),
            Cell::int(m),
            Cell::int(h),
            Cell::int(count_orbits_closed_form_b(m as u64)?),
            Cell::int(count_equivariant_classes_surface(&q, h)?),
        ];
        if full {
            let r = classify_surface_within(&h1, &q, &ctx.budget)?;
            if !r.consistent {
                inconsistent.push(m);
            }
            row.extend([
                Cell::int(r.functions),
                Cell::int(r.equivalence_count),
                Cell::int(r.equivariant_count),
                Cell::int(r.weak_count),
                Cell::Bool(r.consistent),
            ]);
        }
        table.push(row);
    }
    ctx.emit(&table)?;
    if inconsistent.is_empty() {
        Ok(())
    } else {
        Err(CliError::mismatch(format!(
            "direct orbit count differs from h(Q) B(m) at m = {inconsistent:?}"
        )))
    }
}

fn parse_lambda(text: &str) -> Result<CycleColoring, CliError> {
    let colors = text
        .split(',')
        .map(|c| {
            c.trim()
                .parse::<u8>()
                .map_err(|_| CliError::usage(format!("bad color {c:?} in --lambda")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CycleColoring::three(colors)?)
}

pub fn cover<W: Write>(
    ctx: &mut Context<W>,
    m: usize,
    lambda: Option<&str>,
    cells: bool,
) -> Result<(), CliError> {
    let Some(lambda) = lambda else {
        if cells {
            return Err(CliError::usage("--cells needs --lambda"));
        }
        let census = homeomorphism_census(m)?;
        let mut table = Table::new(vec!["m", "euler", "orientable", "colorings"]);
        for (t, count) in census {
            table.push(vec![
                Cell::int(m),
                Cell::int(t.euler),
                Cell::Bool(t.orientable),
                Cell::int(count),
            ]);
        }
        return ctx.emit(&table);
    };
    let lambda = parse_lambda(lambda)?;
    let c = build_small_cover(m, &lambda)?;
    if cells {
        write!(ctx.out, "{}", c.to_text())?;
        return Ok(());
    }
    let t = surface_type(&c, &lambda)?;
    let [v, e, f] = c.cell_counts();
    let mut table = Table::new(vec![
        "lambda",
        "vertices",
        "edges",
        "faces",
        "euler",
        "components",
        "closed",
        "orientable",
    ]);
    table.push(vec![
        Cell::text(lambda.to_string()),
        Cell::int(v),
        Cell::int(e),
        Cell::int(f),
        Cell::int(t.euler),
        Cell::int(connected_components(&c)),
        Cell::Bool(c.is_closed_surface()),
        Cell::Bool(t.orientable),
    ]);
    ctx.emit(&table)
}
