use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use optcs_cli::{parse_instance, verify, ResultFile};

fn instance(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("instances").join(name).display().to_string()
}

fn optcs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_optcs")).args(args).env_remove("COALITION_BRUTE_CAP").output().unwrap()
}

fn optcs_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_optcs"))
        .args(args)
        .env_remove("COALITION_BRUTE_CAP")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn solve_golden_outputs() {
    let golden = [
        ("wvg.json", r#"{"welfare":2,"structure":[[0,2],[1,3]],"method":"typed-dp","guarantee":"optimal","stats":{"oracle_queries":9,"elapsed_ms":0}}"#),
        ("scg.json", r#"{"welfare":2,"structure":[[0,1,5],[2,3,4]],"method":"exact-class","guarantee":"optimal","stats":{"oracle_queries":0,"elapsed_ms":0}}"#),
        ("isg.json", r#"{"welfare":4,"structure":[[0],[1],[2],[3]],"method":"exact-class","guarantee":"optimal","stats":{"oracle_queries":0,"elapsed_ms":0}}"#),
        ("nfg.json", r#"{"welfare":2,"structure":[[0,1,2,3]],"method":"exact-class","guarantee":"optimal","stats":{"oracle_queries":0,"elapsed_ms":0}}"#),
        ("t_nfg.json", r#"{"welfare":2,"structure":[[0,2],[1,3]],"method":"brute-force","guarantee":"optimal","stats":{"oracle_queries":16,"elapsed_ms":0}}"#),
    ];
    for (file, want) in golden {
        let o = optcs(&["solve", &instance(file), "--no-timing"]);
        assert!(o.status.success(), "{file}");
        assert_eq!(stdout(&o).trim_end(), want, "{file}");
    }
}

#[test]
fn every_shipped_instance_solves_and_verifies() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("instances");
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        let o = optcs(&["solve", path.to_str().unwrap()]);
        assert!(o.status.success(), "{}", path.display());
        let doc: ResultFile = serde_json::from_str(&stdout(&o)).unwrap();
        let game = parse_instance(&std::fs::read_to_string(&path).unwrap()).unwrap();
        verify(&game, &doc).unwrap();
    }
}

#[test]
fn output_is_byte_stable() {
    let a = optcs(&["solve", &instance("mwc.json"), "--no-timing"]);
    let b = optcs(&["solve", &instance("mwc.json"), "--no-timing"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn approx_on_tight_example() {
    let o = optcs(&["solve", &instance("wvg_tight.json"), "--strategy", "approx", "--no-timing"]);
    let doc: ResultFile = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((doc.welfare, doc.guarantee.as_str()), (1, "2-approx"));
    let o = optcs(&["solve", &instance("wvg_tight.json"), "--strategy", "brute"]);
    let doc: ResultFile = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc.welfare, 2);
}

#[test]
fn supplied_types() {
    let o = optcs(&["solve", &instance("wvg.json"), "--types", "[[0,1],[2,3]]", "--no-timing"]);
    assert!(o.status.success());
    let doc: ResultFile = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((doc.welfare, doc.method.as_str()), (2, "typed-dp"));
    let o = optcs(&["solve", &instance("wvg.json"), "--types", "[[0,2],[1,3]]"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn stdin_and_exit_codes() {
    let o = optcs_stdin(&["solve", "-"], r#"{"class":"mwc","n":3,"mwc":[[0],[0,1]]}"#);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("contained"));

    let big = r#"{"class":"mwc","n":13,"mwc":[[0,1]]}"#;
    let o = optcs_stdin(&["solve", "-"], big);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("minimal winning"));

    let o = optcs_stdin(&["solve", "-", "--brute-cap", "13"], big);
    assert!(o.status.success());

    let o = optcs_stdin(&["solve", "-", "--strategy", "brute", "--brute-cap", "3"], big);
    assert_eq!(o.status.code(), Some(2));

    let o = optcs(&["solve", &instance("nope.json")]);
    assert_eq!(o.status.code(), Some(1));
    let o = optcs(&["solve", &instance("wvg.json"), "--strategy", "fastest"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn env_cap_is_honoured_and_flag_wins() {
    let big = r#"{"class":"mwc","n":13,"mwc":[[0,1]]}"#;
    let run = |args: &[&str], env: &str| {
        let mut child = Command::new(env!("CARGO_BIN_EXE_optcs"))
            .args(args)
            .env("COALITION_BRUTE_CAP", env)
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .stderr(Stdio::piped())
            .spawn()
            .unwrap();
        child.stdin.take().unwrap().write_all(big.as_bytes()).unwrap();
        child.wait_with_output().unwrap().status.code()
    };
    assert_eq!(run(&["solve", "-"], "13"), Some(0));
    assert_eq!(run(&["solve", "-", "--brute-cap", "12"], "13"), Some(2));
    assert_eq!(run(&["solve", "-"], "lots"), Some(1));
}

#[test]
fn value_command() {
    let o = optcs(&["value", &instance("wvg.json"), "--coalition", "[0,2]"]);
    assert_eq!(stdout(&o).trim_end(), r#"{"coalition":[0,2],"value":1}"#);
    let o = optcs(&["value", &instance("wvg.json"), "--coalition", "[7]"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn validate_types_command() {
    let o = optcs(&["validate-types", &instance("wvg.json"), "--partition", "[[0,2],[1,3]]"]);
    assert_eq!(
        stdout(&o).trim_end(),
        r#"{"valid":false,"witness":{"i":0,"j":2,"coalition":[3],"value_with_i":1,"value_with_j":0}}"#
    );
    let o = optcs(&["validate-types", &instance("wvg.json"), "--partition", "[[0,1],[2,3]]"]);
    assert_eq!(stdout(&o).trim_end(), r#"{"valid":true,"witness":null}"#);
}

#[test]
fn gen_command_outputs_solvable_instances() {
    let cases: [(&[&str], i64); 5] = [
        (&["--reduction", "partition", "--values", "3,3,1,1", "--k", "2"], 2),
        (&["--reduction", "maxcut", "--vertices", "3", "--edges", "[[0,1,1],[1,2,1],[0,2,1]]"], 11),
        (&["--reduction", "clique", "--vertices", "4", "--edges", "[[0,1],[1,2],[2,3],[3,0]]"], 2),
        (&["--reduction", "threshold", "--quota", "4", "--weights", "3,3,1,1"], 2),
        (&["--reduction", "threshold", "--quota", "4", "--weights", "3,3,1,1", "--target", "matching"], 2),
    ];
    for (args, want) in cases {
        let mut full = vec!["gen"];
        full.extend_from_slice(args);
        let o = optcs(&full);
        assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        let solved = optcs_stdin(&["solve", "-"], &stdout(&o));
        let doc: ResultFile = serde_json::from_str(&stdout(&solved)).unwrap();
        assert_eq!(doc.welfare, want, "{args:?}");
    }
    let o = optcs(&["gen", "--reduction", "partition", "--values", "3,1", "--k", "3"]);
    assert_eq!(o.status.code(), Some(1));
    let o = optcs(&["gen", "--reduction", "clique", "--vertices", "3", "--edges", "[[0,1],[1,2],[0,2]]"]);
    assert_eq!(o.status.code(), Some(1));
    let o = optcs(&["gen", "--reduction", "maxcut", "--vertices", "3"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn bench_csv() {
    let o = optcs(&["bench", "--family", "wvg-tight", "--sizes", "4,8"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("family,n,k,welfare,optimum,ratio,elapsed_ms"));
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(&row[..6], &["wvg-tight", "4", "2", "1", "2", "0.5000"]);
    assert_eq!(lines.count(), 1);

    for family in ["wvg-dp", "wvg-greedy", "scg", "nfg", "maxcut"] {
        let o = optcs(&["bench", "--family", family, "--sizes", "4,6"]);
        assert!(o.status.success(), "{family}");
        for line in stdout(&o).lines().skip(1) {
            let cells: Vec<&str> = line.split(',').collect();
            assert_eq!(cells.len(), 7, "{line}");
            assert_eq!(cells[0], family);
            if !cells[4].is_empty() {
                let (w, opt): (i64, i64) = (cells[3].parse().unwrap(), cells[4].parse().unwrap());
                assert!(2 * w >= opt, "{line}");
            }
        }
    }
}
