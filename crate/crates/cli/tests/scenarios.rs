use frse_cli::output::decode_snapshot;
use frse_cli::{execute, parse_config, Artifacts};
use std::path::Path;
use std::process::Command;

fn run_text(text: &str) -> Artifacts {
    execute(&parse_config(text, None).unwrap()).unwrap()
}

fn file<'a>(a: &'a Artifacts, name: &str) -> &'a [u8] {
    &a.files.iter().find(|f| f.0 == name).unwrap_or_else(|| panic!("no {name}")).1
}

fn column(csv: &[u8], name: &str) -> Vec<f64> {
    let text = std::str::from_utf8(csv).unwrap();
    let mut lines = text.lines();
    let idx = lines.next().unwrap().split(',').position(|h| h == name).unwrap();
    lines.map(|l| l.split(',').nth(idx).unwrap().parse().unwrap()).collect()
}

const LINEAR_BEAM: &str = "[scenario]\nkind = beam\nwidth = 1.5\nvelocity = 0.7\n[params]\nalpha = 2\nB = 0\n[grid]\nx_min = -40\nx_max = 40\nn = 1024\n[run]\nt_final = 5\ndt = 0.01\nrecord_every = 25\n";

const DECAY: &str = "[scenario]\nkind = sne\nmode = decay\nq = 3\np = 1\nepsilon = 1e-7\n[params]\nalpha = 1.5\nnu = 0.5\nG = 1\n[run]\nt_final = 30\ndt = 2e-3\nrecord_every = 25\nseed = 7\n";

#[test]
fn linear_beam_norm_column_constant() {
    let a = run_text(LINEAR_BEAM);
    let norms = column(file(&a, "evolution.csv"), "norm");
    assert_eq!(norms.len(), 21);
    assert!(norms.iter().all(|n| (n - norms[0]).abs() <= 1e-12 * norms[0]));
    // free drift at the carrier velocity
    let c = column(file(&a, "evolution.csv"), "centroid");
    assert!((c.last().unwrap() - 0.7 * 5.0).abs() < 1e-6);
}

#[test]
fn decay_summary_has_both_rates() {
    let cfg = parse_config(DECAY, None).unwrap();
    let a = execute(&cfg).unwrap();
    let s = a.summary(&cfg);
    let m = &s["metrics"];
    let (pred, meas) = (m["predicted_rate"].as_f64().unwrap(), m["measured_rate"].as_f64().unwrap());
    assert!((pred - 0.5947).abs() < 1e-3);
    assert!((meas / pred - 1.0).abs() < 0.05);
    assert_eq!(s["scenario"], "sne");
    assert!(s.get("runtime").is_none());
}

#[test]
fn stable_decay_reports_slope() {
    let a = run_text(&DECAY.replace("alpha = 1.5", "alpha = 0.5"));
    assert!(a.metrics["measured_rate"].is_null());
    assert!(a.metrics["sideband_slope"].as_f64().unwrap().abs() < 0.06);
}

fn all_scenarios() -> Vec<String> {
    vec![
        LINEAR_BEAM.replace("B = 0", "B = -1") + "[output]\nformats = csv,snapshot,summary\n",
        "[scenario]\nkind = beam\ninitial = airy\n[params]\nalpha = 1.6\n[profile]\nmetric_kind = power\nmetric_value = -0.5\n[grid]\nx_min = -60\nx_max = 60\nn = 512\n[run]\nt_final = 1\ndt = 0.01\n".into(),
        "[scenario]\nkind = slab\nk_carrier = 4\nn_modes = 64\n[params]\nalpha = 1.5\nbeta = 0.8\n[grid]\nx_min = -10\nx_max = 10\nn = 256\n[run]\nt_final = 1\ndt = 0.05\nrecord_every = 2\n".into(),
        "[scenario]\nkind = sne\n[params]\nG = 1\nalpha = 1.2\n[grid]\nn = 256\n[run]\nt_final = 1\ndt = 0.01\n".into(),
        DECAY.replace("t_final = 30", "t_final = 12"),
        "[scenario]\nkind = ftse\n[params]\nbeta = 0.7\n[run]\nt_final = 0.5\ndt = 1e-3\nrecord_every = 50\n".into(),
        "[scenario]\nkind = anderson\ndisorder = 3\ncoupling = tensor\nwindow_end = 12\n[params]\nB = 1\n[grid]\nx_min = -16\nx_max = 16\nn = 32\n[run]\nt_final = 2\ndt = 1e-2\nseed = 3\n".into(),
        "[scenario]\nkind = specfun-table\nfunction = mittag_leffler\nml_alpha = 0.8\nml_beta = 1.2\n".into(),
    ]
}

#[test]
fn repeated_runs_are_identical() {
    for text in all_scenarios() {
        let a = run_text(&text);
        let b = run_text(&text);
        assert!(!a.files.is_empty());
        assert_eq!(a, b, "{text}");
    }
}

#[test]
fn different_seed_changes_disorder() {
    let base = &all_scenarios()[6];
    let a = run_text(base);
    let b = run_text(&base.replace("seed = 3", "seed = 4"));
    assert_ne!(file(&a, "modes.csv"), file(&b, "modes.csv"));
}

fn frse(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_frse")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn binary_outputs_byte_identical() {
    let tmp = tempfile::tempdir().unwrap();
    for (i, text) in all_scenarios().iter().enumerate() {
        let cfg = write(tmp.path(), &format!("s{i}.cfg"), text);
        let mut dirs = Vec::new();
        for rep in 0..2 {
            let d = tmp.path().join(format!("out{i}_{rep}"));
            let (code, _, err) = frse(&["run", &cfg, "--dir", d.to_str().unwrap()]);
            assert_eq!(code, 0, "{err}");
            dirs.push(d);
        }
        let mut names: Vec<_> = std::fs::read_dir(&dirs[0]).unwrap().map(|e| e.unwrap().file_name()).collect();
        names.sort();
        assert!(names.iter().any(|n| n.to_string_lossy().ends_with(".csv")));
        for n in names {
            assert_eq!(std::fs::read(dirs[0].join(&n)).unwrap(), std::fs::read(dirs[1].join(&n)).unwrap(), "{n:?}");
        }
    }
}

#[test]
fn snapshot_file_decodes() {
    let tmp = tempfile::tempdir().unwrap();
    let cfg = write(tmp.path(), "b.cfg", &all_scenarios()[0]);
    let d = tmp.path().join("o");
    assert_eq!(frse(&["beam", &cfg, "--dir", d.to_str().unwrap()]).0, 0);
    let s = decode_snapshot(&std::fs::read(d.join("final.frse")).unwrap()).unwrap();
    assert_eq!(s.values.len(), 1024);
    assert_eq!((s.x_min, s.x_max), (-40.0, 40.0));
    let csv = std::fs::read(d.join("field_final.csv")).unwrap();
    let re = column(&csv, "re");
    assert!(re.iter().zip(&s.values).all(|(a, z)| *a == z.re));
}

#[test]
fn exit_codes() {
    let tmp = tempfile::tempdir().unwrap();
    let out = tmp.path().join("o");
    let o = out.to_str().unwrap();
    let bad = write(tmp.path(), "bad.cfg", "[scenario]\nkind = beam\n[params]\nalpha = 2.5\nmass = -1\n");
    let (code, _, err) = frse(&["run", &bad, "--dir", o]);
    assert_eq!(code, 2);
    assert!(err.contains("params.alpha") && err.contains("params.mass"), "{err}");
    assert_eq!(frse(&["run", tmp.path().join("missing.cfg").to_str().unwrap()]).0, 4);
    // too short for the sideband to reach the fit window
    let short = write(tmp.path(), "short.cfg", &DECAY.replace("t_final = 30", "t_final = 0.4"));
    let (code, _, err) = frse(&["sne", &short, "--dir", o]);
    assert_eq!(code, 3, "{err}");
    let m = write(tmp.path(), "m.cfg", "[scenario]\nkind = ftse\nhamiltonian = file\nmatrix = \"/nonexistent/h.txt\"\n");
    assert_eq!(frse(&["ftse", &m, "--dir", o]).0, 4);
    let beam = write(tmp.path(), "beam.cfg", "[scenario]\nkind = beam\n");
    assert_eq!(frse(&["slab", &beam, "--dir", o]).0, 2);
    // output directory blocked by a plain file
    let blocker = write(tmp.path(), "blocker", "x");
    let ok = write(tmp.path(), "ok.cfg", "[scenario]\nkind = specfun-table\n");
    assert_eq!(frse(&["run", &ok, "--dir", &format!("{blocker}/sub")]).0, 4);
}

#[test]
fn matrix_file_input() {
    let tmp = tempfile::tempdir().unwrap();
    let h = write(tmp.path(), "h.txt", "2\n1 0\n0.5 -0.25\n0.5 0.25\n-1 0\n");
    let cfg = write(tmp.path(), "f.cfg", &format!("[scenario]\nkind = ftse\nhamiltonian = file\nmatrix = \"{h}\"\n[params]\nbeta = 1\n[run]\nt_final = 1\ndt = 1e-3\nrecord_every = 100\n"));
    let d = tmp.path().join("o");
    let (code, stdout, err) = frse(&["run", &cfg, "--dir", d.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    assert!(stdout.contains("\"dimension\": 2"));
    let norms = column(&std::fs::read(d.join("evolution.csv")).unwrap(), "norm_ml");
    assert!(norms.iter().all(|n| (n - 1.0).abs() < 1e-10));
    let skew = write(tmp.path(), "h2.txt", "2\n1 0\n0.5 0\n0.4 0\n-1 0\n");
    let cfg = write(tmp.path(), "g.cfg", &format!("[scenario]\nkind = ftse\nhamiltonian = file\nmatrix = \"{skew}\"\n"));
    assert_eq!(frse(&["run", &cfg, "--dir", d.to_str().unwrap()]).0, 2);
}

#[test]
fn check_prints_canonical_config() {
    let tmp = tempfile::tempdir().unwrap();
    let cfg = write(tmp.path(), "c.cfg", "[scenario]\nkind = anderson\n");
    let (code, text, _) = frse(&["check", &cfg]);
    assert_eq!(code, 0);
    assert!(text.contains("disorder = 2.0") && text.contains("[run]"));
    let again = write(tmp.path(), "c2.cfg", &text);
    assert_eq!(frse(&["check", &again]).1, text);
}
