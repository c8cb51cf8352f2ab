use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use ntcover::approx::{exact_vc, matching_2approx_vc, ratio_bound};
use ntcover::kernel::kernelize;
use ntcover::oracle::OracleKind;
use rayon::prelude::*;

use crate::input::load;
use crate::{emit, solve_graph, BenchArgs};

const HEADER: [&str; 13] = [
    "instance",
    "n",
    "m",
    "kernel_frac",
    "oracle",
    "swap_size",
    "cover",
    "lp_bound",
    "ratio_bound",
    "opt",
    "matching",
    "matching_ratio",
    "time_ms",
];

/// Files named on the command line, with directories expanded to their
/// regular files in name order.
fn expand(paths: &[PathBuf]) -> Result<Vec<PathBuf>> {
    let mut files = Vec::new();
    for path in paths {
        if path.is_dir() {
            let mut entries = Vec::new();
            for entry in
                fs::read_dir(path).with_context(|| format!("reading {}", path.display()))?
            {
                let p = entry?.path();
                if p.is_file() {
                    entries.push(p);
                }
            }
            entries.sort();
            files.extend(entries);
        } else {
            files.push(path.clone());
        }
    }
    Ok(files)
}

fn rows_for(path: &Path, args: &BenchArgs) -> Result<Vec<Vec<String>>> {
    let loaded = load(path, args.format, args.weight_scale)?;
    let g = &loaded.graph;
    let cap = args.oracle_args.cap as usize;
    let kernel = kernelize(g)?;
    let lp = kernel.solution.objective();
    let dash = || "-".to_string();
    let kernel_frac = if g.num_vertices() == 0 {
        dash()
    } else {
        format!("{:.3}", kernel.half.len() as f64 / g.num_vertices() as f64)
    };
    let opt = (g.num_vertices() <= cap)
        .then(|| exact_vc(g, cap).map(|c| c.weight().to_string()))
        .transpose()?
        .unwrap_or_else(dash);
    let matching = matching_2approx_vc(g).weight();
    let matching_ratio =
        ratio_bound(matching, lp).map_or_else(dash, |r| format!("{}/{}", r.numer(), r.denom()));

    let mut rows = Vec::new();
    for &kind in &args.oracles {
        // swap size, cover, ratio bound, time
        let measured = if kind == OracleKind::Exact && kernel.graph.num_vertices() > cap {
            log::warn!(
                "{}: kernel has {} vertices, skipping exact oracle (cap {cap})",
                path.display(),
                kernel.graph.num_vertices()
            );
            [dash(), "skipped".to_string(), dash(), dash()]
        } else {
            let start = Instant::now();
            let res = solve_graph(g, kind, &args.oracle_args)
                .with_context(|| format!("{} with {kind}", path.display()))?;
            let elapsed = start.elapsed();
            [
                res.swap_size.map_or_else(dash, |t| t.to_string()),
                res.cover_weight().to_string(),
                res.certified_ratio_bound()
                    .map_or_else(dash, |r| format!("{}/{}", r.numer(), r.denom())),
                format!("{:.3}", elapsed.as_secs_f64() * 1e3),
            ]
        };
        let [swap, cover, ratio, time] = measured;
        rows.push(vec![
            path.display().to_string(),
            g.num_vertices().to_string(),
            g.num_edges().to_string(),
            kernel_frac.clone(),
            kind.to_string(),
            swap,
            cover,
            lp.to_string(),
            ratio,
            opt.clone(),
            matching.to_string(),
            matching_ratio.clone(),
            time,
        ]);
    }
    Ok(rows)
}

pub fn run(args: BenchArgs) -> Result<ExitCode> {
    let files = expand(&args.paths)?;
    let per_file: Vec<Result<Vec<Vec<String>>>> =
        files.par_iter().map(|path| rows_for(path, &args)).collect();
    let mut out = HEADER.join("\t");
    out.push('\n');
    for rows in per_file {
        for row in rows? {
            out += &row.join("\t");
            out.push('\n');
        }
    }
    emit(args.output.as_deref(), &out)?;
    Ok(ExitCode::SUCCESS)
}
