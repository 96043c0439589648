use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;
use std::process::{Command, Stdio};

use normpm_cli::{run, Outcome};
use proptest::prelude::*;

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.scx"));
    std::fs::read_to_string(path).unwrap()
}

fn normpm(args: &[&str]) -> Outcome {
    normpm_stdin(args, "")
}

fn normpm_stdin(args: &[&str], stdin: &str) -> Outcome {
    let argv = std::iter::once("normpm").chain(args.iter().copied());
    run(argv, &mut stdin.as_bytes())
}

fn write(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_owned()
}

fn fields(line: &str) -> BTreeMap<String, String> {
    line.split_whitespace()
        .map(|kv| {
            let (k, v) = kv.split_once('=').unwrap();
            (k.to_owned(), v.to_owned())
        })
        .collect()
}

fn stacked10() -> String {
    let script = "stack d=3 seed=none\nfacet 1 2 3 4 new 6\nfacet 1 2 3 6 new 7\nfacet 1 2 6 7 new 8\n\
                  facet 2 5 3 4 new 9\nfacet 2 3 4 9 new 10\n";
    let out = normpm_stdin(&["stacked", "generate"], script);
    assert_eq!(out.code, 0, "{}", out.stderr);
    out.stdout
}

#[test]
fn rp2_6_golden_is_a_two_neighbourly_surface() {
    let text = golden("rp2_6");
    let facets: Vec<Vec<u32>> =
        text.lines().map(|l| l.split(' ').map(|t| t.parse().unwrap()).collect()).collect();
    assert_eq!(facets.len(), 10);
    let mut edge_use = BTreeMap::new();
    for f in &facets {
        assert_eq!(f.len(), 3);
        for (a, b) in [(f[0], f[1]), (f[0], f[2]), (f[1], f[2])] {
            *edge_use.entry((a.min(b), a.max(b))).or_insert(0) += 1;
        }
    }
    assert_eq!(edge_use.len(), 15, "edge graph is K6");
    assert!(edge_use.values().all(|&k| k == 2));
    // 6 - 15 + 10
    let chi = 6 - edge_use.len() as i64 + facets.len() as i64;
    assert_eq!(chi, 1);
}

#[test]
fn catalog_emit_matches_goldens() {
    let list = normpm(&["catalog", "list"]);
    assert_eq!(list.code, 0);
    let names: Vec<&str> = list.stdout.lines().map(|l| l.split('\t').next().unwrap()).collect();
    assert!(names.contains(&"rp2_6"));
    for name in names {
        let a = normpm(&["catalog", "emit", name]);
        let b = normpm(&["catalog", "emit", name]);
        assert_eq!(a.code, 0);
        assert_eq!(a.stdout, b.stdout);
        assert_eq!(a.stdout, golden(name), "{name}");
    }
    assert_eq!(normpm(&["catalog", "emit", "nope"]).code, 2);
}

#[test]
fn check_rp2_6() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(&dir, "complex.scx", &golden("rp2_6"));
    let out = normpm(&["check", &path]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.starts_with("normal_pm=true orientable=false euler=1 "), "{}", out.stdout);
    let json = normpm(&["--json", "check", &path]);
    let v: serde_json::Value = serde_json::from_str(&json.stdout).unwrap();
    assert_eq!(v["normal_pm"], true);
    assert_eq!(v["orientable"], false);
    assert_eq!(v["euler"], 1);
    assert_eq!(v["f_vector"], serde_json::json!([6, 15, 10]));
    assert_eq!(v.as_object().unwrap().len(), fields(&out.stdout).len());
}

#[test]
fn check_fails_with_witness() {
    // Two tetrahedron boundaries sharing one vertex: the link of 1 is disconnected.
    let text = "1 2 3\n1 2 4\n1 3 4\n2 3 4\n1 5 6\n1 5 7\n1 6 7\n5 6 7\n";
    let out = normpm_stdin(&["check"], text);
    assert_eq!(out.code, 1);
    let f = fields(&out.stdout);
    assert_eq!(f["normal_pm"], "false");
    assert_eq!(f["weak_pm"], "true");
    assert_eq!(f["strongly_connected"], "false");
    assert_eq!(f["pseudomanifold"], "false");
    assert_ne!(f["failing_face"], "none");
}

#[test]
fn rigidity_on_stacked10() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(&dir, "stacked10.scx", &stacked10());
    let out = normpm(&["rigidity", "--q", "4", &path]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.starts_with("rigid=true minimal=true edges=30 bound=30 "), "{}", out.stdout);
}

#[test]
fn rigidity_is_independent_of_worker_count() {
    let dir = tempfile::tempdir().unwrap();
    let inputs = [
        ("stacked10", stacked10(), "4"),
        ("torus", golden("torus_7"), "3"),
        ("rp2", golden("rp2_6"), "4"),
        ("join", golden("s1_3_join_s1_3"), "5"),
    ];
    for (name, text, q) in inputs {
        let path = write(&dir, &format!("{name}.scx"), &text);
        let base = normpm(&["rigidity", "--q", q, &path]);
        for w in ["2", "3", "8"] {
            let out = normpm(&["rigidity", "--q", q, "--workers", w, &path]);
            assert_eq!(out, base, "{name} with {w} workers");
        }
        let stats = normpm(&["rigidity", "--q", q, "--stats", &path]);
        assert!(stats.stdout.starts_with(base.stdout.trim_end()));
    }
}

#[test]
fn rigidity_failure_reports_a_witness() {
    // rp2_6 has 15 edges and 6 vertices; q=4 needs 4*(6-3)+3 = 15, q=5 needs 18.
    let out = normpm_stdin(&["rigidity", "--q", "5"], &golden("rp2_6"));
    assert_eq!(out.code, 1);
    let f = fields(&out.stdout);
    assert_eq!(f["rigid"], "false");
    assert_ne!(f["witness"], "none");
    let needed: u64 = f["witness_required"].parse().unwrap();
    let got: u64 = f["witness_edges"].parse().unwrap();
    assert!(got < needed);
}

#[test]
fn precondition_violations_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(&dir, "bad.scx", "1 2\n2 3\n3 1\n");
    let out = normpm(&["lbt", &bad]);
    assert_eq!(out.code, 2);
    assert!(out.stdout.is_empty());
    assert!(out.stderr.starts_with("error: "));
    let mixed = write(&dir, "mixed.scx", "1 2 3\n3 4\n");
    assert_eq!(normpm(&["lbt", &mixed]).code, 2);
    assert_eq!(normpm_stdin(&["check"], "1 2 3\n1 2 2\n").code, 2);
    assert_eq!(normpm(&["frobnicate"]).code, 2);
    assert_eq!(normpm(&["check", "/nonexistent/x.scx"]).code, 2);
}

#[test]
fn star_then_collapse_is_byte_exact() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["rp2_6", "torus_7", "icosahedron", "s3_5"] {
        let original = golden(name);
        let input = write(&dir, "in.scx", &original);
        let rec = dir.path().join(format!("{name}.rec"));
        let rec = rec.to_str().unwrap();
        let facet = original.lines().nth(1).unwrap().replace(' ', ",");
        let starred = normpm(&["move", "star", &input, "--facet", &facet, "--vertex", "new", "--record", rec]);
        assert_eq!(starred.code, 0, "{}", starred.stderr);
        assert_ne!(starred.stdout, original);
        let mid = write(&dir, "mid.scx", &starred.stdout);
        let back = normpm(&["move", "collapse", &mid, "--vertex", "new", "--record", rec]);
        assert_eq!(back.stdout, original, "{name}");

        // The recorded pair replays to the same file, and its inverse script is
        // the collapse/star pair in reverse.
        let replayed = normpm(&["move", "replay", &input, "--script", rec]);
        assert_eq!(replayed.stdout, original);
        let inverse = normpm(&["move", "invert", &input, "--script", rec]);
        assert_eq!(inverse.code, 0);
        let lines: Vec<&str> = inverse.stdout.lines().collect();
        assert_eq!(lines.len(), 2);
        assert!(lines[0].starts_with("(star "));
        assert_eq!(lines[1], "(collapse (vertex new))");
    }
}

/// Graph distances by breadth-first search over the facet lines.
fn distances(text: &str) -> BTreeMap<(String, String), usize> {
    let mut adj: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for line in text.lines() {
        let f: Vec<&str> = line.split(' ').collect();
        for a in &f {
            for b in &f {
                if a != b {
                    adj.entry((*a).to_owned()).or_default().push((*b).to_owned());
                }
            }
        }
    }
    let mut out = BTreeMap::new();
    for start in adj.keys() {
        let mut seen = BTreeMap::from([(start.clone(), 0usize)]);
        let mut queue = std::collections::VecDeque::from([start.clone()]);
        while let Some(v) = queue.pop_front() {
            let d = seen[&v];
            for w in &adj[&v] {
                if !seen.contains_key(w) {
                    seen.insert(w.clone(), d + 1);
                    queue.push_back(w.clone());
                }
            }
        }
        for (v, d) in seen {
            out.insert((start.clone(), v), d);
        }
    }
    out
}

#[test]
fn handle_pipeline_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let sphere = golden("icosahedron");
    let input = write(&dir, "s.scx", &sphere);
    let dist = distances(&sphere);
    let facets: Vec<Vec<&str>> = sphere.lines().map(|l| l.split(' ').collect()).collect();
    // Pick a facet pair and a matching with every pair at distance 3.
    let mut found = None;
    'search: for f in &facets {
        for g in &facets {
            for perm in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
                if (0..3).all(|i| dist[&(f[i].to_owned(), g[perm[i]].to_owned())] >= 3) {
                    found = Some((0..3).map(|i| format!("{}:{}", f[i], g[perm[i]])).collect::<Vec<_>>().join(","));
                    break 'search;
                }
            }
        }
    }
    let pairs = found.expect("antipodal facets of the icosahedron");
    let adm = normpm(&["handle", "admissible", &input, "--pairs", &pairs]);
    assert_eq!(adm.code, 0, "{}{}", adm.stdout, adm.stderr);
    let near: Vec<&str> = facets[0].clone();
    let other = facets.iter().find(|g| g.iter().all(|t| !near.contains(t))).unwrap();
    let close = format!("{}:{},{}:{},{}:{}", near[0], other[0], near[1], other[1], near[2], other[2]);
    let dists: Vec<usize> = (0..3).map(|i| dist[&(near[i].to_owned(), other[i].to_owned())]).collect();
    if dists.iter().any(|&d| d < 3) {
        let bad = normpm(&["handle", "admissible", &input, "--pairs", &close]);
        assert_eq!(bad.code, 1);
        assert_eq!(fields(&bad.stdout)["admissible"], "false");
    }

    let rec = dir.path().join("h.rec");
    let rec = rec.to_str().unwrap();
    let added = normpm(&["handle", "add", &input, "--pairs", &pairs, "--record", rec]);
    assert_eq!(added.code, 0, "{}", added.stderr);
    let torus = write(&dir, "t.scx", &added.stdout);
    let chk = fields(&normpm(&["check", &torus]).stdout);
    assert_eq!(chk["normal_pm"], "true");
    assert_eq!(chk["euler"], "0");
    assert_eq!(chk["orientable"], "true");
    assert_eq!(chk["f_vector"], "9,27,18");

    let found = fields(&normpm(&["handle", "find", &torus]).stdout);
    assert_eq!(found["found"], "true");
    assert_eq!(found["crossing_components"], "2");

    let inverse = normpm(&["move", "invert", &input, "--script", rec]);
    assert_eq!(inverse.code, 0, "{}", inverse.stderr);
    let inv = write(&dir, "inv.rec", &inverse.stdout);
    let back = normpm(&["move", "replay", &torus, "--script", &inv]);
    assert_eq!(back.code, 0, "{}", back.stderr);
    assert_eq!(back.stdout, sphere);
}

#[test]
fn connected_sum_and_decompose() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(&dir, "a.scx", &golden("torus_7"));
    let shifted: String = golden("torus_7")
        .lines()
        .map(|l| l.split(' ').map(|t| (t.parse::<u32>().unwrap() + 10).to_string()).collect::<Vec<_>>().join(" ") + "\n")
        .collect();
    let b = write(&dir, "b.scx", &shifted);
    let first = golden("torus_7").lines().next().unwrap().to_owned();
    let other = shifted.lines().next().unwrap().to_owned();
    let p: Vec<String> = first.split(' ').zip(other.split(' ')).map(|(x, y)| format!("{x}:{y}")).collect();
    let sum = normpm(&["consum", &a, &b, "--pairs", &p.join(",")]);
    assert_eq!(sum.code, 0, "{}", sum.stderr);
    let s = write(&dir, "sum.scx", &sum.stdout);
    assert_eq!(fields(&normpm(&["check", &s]).stdout)["euler"], "-2");

    let out_dir = dir.path().join("pieces");
    let dec = normpm(&["decompose", &s, "--out-dir", out_dir.to_str().unwrap()]);
    assert_eq!(dec.code, 0, "{}", dec.stderr);
    let f = fields(&dec.stdout);
    assert_eq!(f["verified"], "true");
    assert_ne!(f["case"], "standard_sphere");
    assert!(out_dir.join("readd.rec").exists() || out_dir.join("b_u.scx").exists());
}

#[test]
fn gbm_swaps_a_square_diagonal() {
    let dir = tempfile::tempdir().unwrap();
    let oct = write(&dir, "o.scx", &golden("octahedron"));
    let text = golden("octahedron");
    let facets: Vec<&str> = text.lines().collect();
    // Two facets sharing an edge form a ball; flip the shared diagonal.
    let (f, g) = (facets[0], facets[1]);
    let fs: Vec<&str> = f.split(' ').collect();
    let gs: Vec<&str> = g.split(' ').collect();
    let shared: Vec<&str> = fs.iter().copied().filter(|t| gs.contains(t)).collect();
    assert_eq!(shared.len(), 2);
    let apex_f = fs.iter().find(|t| !shared.contains(t)).unwrap();
    let apex_g = gs.iter().find(|t| !shared.contains(t)).unwrap();
    let remove = write(&dir, "r.scx", &format!("{f}\n{g}\n"));
    let insert = write(
        &dir,
        "i.scx",
        &format!("{apex_f} {apex_g} {}\n{apex_f} {apex_g} {}\n", shared[0], shared[1]),
    );
    let out = normpm(&["gbm", &oct, "--remove", &remove, "--insert", &insert]);
    // The apexes over an edge of the octahedron are antipodal, so the new
    // diagonal is not yet an edge.
    assert_eq!(out.code, 0, "{}", out.stderr);
    let flipped = write(&dir, "f.scx", &out.stdout);
    assert_eq!(fields(&normpm(&["fvec", &flipped]).stdout)["f_vector"], "6,12,8");
    let back = normpm(&["gbm", &flipped, "--remove", &insert, "--insert", &remove]);
    assert_eq!(back.stdout, text);
    let json = normpm(&["--json", "gbm", &oct, "--remove", &remove, "--insert", &insert]);
    let v: serde_json::Value = serde_json::from_str(&json.stdout).unwrap();
    assert_eq!(v["ball_status"], "asserted");
    assert_eq!(v["facets"].as_array().unwrap().len(), 8);
}

#[test]
fn bound_verbs() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(&dir, "s.scx", &stacked10());
    let lbt = fields(&normpm(&["lbt", &path]).stdout);
    assert_eq!(lbt["holds"], "true");
    assert_eq!(lbt["equality_all"], "true");
    assert_eq!(lbt["slack"], "0,0,0");

    // h = (1, 13, 77, 77, 77, 13, 1) for f_0 = 19, f_1 = 157.
    let glbc = normpm(&["glbc", "--d", "5", "--k", "2", "--prefix", "19,157"]);
    assert_eq!(glbc.stdout, "f_vector=19,157,535,915,777,259\n");
    let chk = normpm(&["fvec", "check", "--d", "5", "--k", "2", "19,157,546,948,810,270"]);
    assert_eq!(chk.code, 0);
    assert_eq!(fields(&chk.stdout)["slack"], "11,33,33,11");
    let off = normpm(&["fvec", "check", "--d", "5", "--k", "2", "19,157,546,948,810,258"]);
    assert_eq!(off.code, 1);

    assert_eq!(normpm(&["dehn", "--fvec", "19,157,546,948,810,270"]).code, 0);
    assert_eq!(normpm(&["dehn", "--fvec", "6,12,8"]).code, 0);
    // Euler characteristic 1, not a homology sphere.
    assert_eq!(normpm(&["dehn", "--fvec", "6,15,10"]).code, 1);
    assert_eq!(normpm(&["stacked", "fvector", "--d", "3", "--n", "10"]).stdout, "f_vector=10,30,40,20\n");

    let st = fields(&normpm(&["stacked", "check", &path]).stdout);
    assert_eq!(st["stacked"], "true");
    assert_eq!(st["cliques"], "true");
    let torus = fields(&normpm_stdin(&["stacked", "check"], &golden("torus_7")).stdout);
    assert_eq!(torus["stacked"], "false");
    assert_eq!(torus["cliques"], "false");
}

#[test]
fn construction_verbs() {
    let dir = tempfile::tempdir().unwrap();
    let ico = write(&dir, "i.scx", &golden("icosahedron"));
    let link = normpm(&["link", &ico, "--face", "1"]);
    assert_eq!(link.stdout.lines().count(), 5);
    let star = normpm(&["star", &ico, "--vertex", "1"]);
    assert_eq!(star.stdout.lines().count(), 5);
    let anti = normpm(&["antistar", &ico, "--face", "1"]);
    assert_eq!(anti.stdout.lines().count(), 15);
    let s0 = write(&dir, "s0.scx", "a\nb\n");
    let tri = write(&dir, "t.scx", "1 2\n2 3\n1 3\n");
    let bip = normpm(&["join", &s0, &tri]);
    assert_eq!(bip.code, 0, "{}", bip.stderr);
    assert_eq!(bip.stdout.lines().count(), 6);
    let susp = normpm(&["suspend", &tri, "--u", "1", "--v", "9"]);
    let f = fields(&normpm_stdin(&["fvec"], &susp.stdout).stdout);
    assert_eq!(f["f_vector"], "4,6,4");
    let ind = normpm(&["induced", &ico, "--vertices", "1,2,3"]);
    assert!(ind.code == 0);
}

#[test]
fn binary_reads_stdin_and_sets_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_normpm");
    let mut child = Command::new(bin)
        .args(["check"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(golden("rp2_6").as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("normal_pm=true orientable=false euler=1"));

    let out = Command::new(bin).args(["rigidity", "--q", "4", "-"]).env("NORMPM_WORKERS", "3").stdin(Stdio::null()).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(bin).args(["catalog", "emit", "s2_4"]).output().unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), golden("s2_4"));
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn generated_spheres_survive_star_collapse(seed in any::<u64>(), extra in 0usize..6, d in 2i32..4) {
        let mut script = format!("stack d={d} seed={seed}\n");
        for i in 0..extra {
            script.push_str(&format!("random new {}\n", 100 + i));
        }
        let sphere = normpm_stdin(&["stacked", "generate"], &script);
        prop_assert_eq!(sphere.code, 0);
        let first = sphere.stdout.lines().next().unwrap().replace(' ', ",");
        let starred = normpm_stdin(&["move", "star", "--facet", &first, "--vertex", "x"], &sphere.stdout);
        prop_assert_eq!(starred.code, 0);
        let back = normpm_stdin(&["move", "collapse", "--vertex", "x"], &starred.stdout);
        prop_assert_eq!(back.stdout, sphere.stdout.clone());
        let chk = normpm_stdin(&["stacked", "check"], &sphere.stdout);
        prop_assert_eq!(chk.code, 0);
    }
}
