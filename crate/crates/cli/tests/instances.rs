use std::fs;
use std::path::PathBuf;

use optcs::games::GameInstance;
use optcs::solve::{Method, SolveResult, Stats};
use optcs::{CoalitionStructure, Coalition};
use optcs_cli::{parse_instance, serialize_instance, CliError, ResultFile};

fn shipped() -> Vec<PathBuf> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("instances");
    let mut files: Vec<PathBuf> = fs::read_dir(dir).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    files
}

#[test]
fn shipped_files_round_trip() {
    let files = shipped();
    assert!(files.len() >= 13);
    for path in files {
        let text = fs::read_to_string(&path).unwrap();
        let game = parse_instance(&text).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        let canonical = serialize_instance(&game);
        let again = parse_instance(&canonical).unwrap();
        assert_eq!(again, game, "{}", path.display());
        assert_eq!(serialize_instance(&again), canonical, "{}", path.display());
    }
}

#[test]
fn canonical_form_fills_inferred_fields() {
    let game = parse_instance(r#"{"class":"nfg","s":0,"t":3,"arcs":[[0,1,1],[1,3,1],[0,2,1],[2,3,1]]}"#).unwrap();
    assert_eq!(
        serialize_instance(&game),
        r#"{"class":"nfg","vertices":4,"s":0,"t":3,"arcs":[[0,1,1],[1,3,1],[0,2,1],[2,3,1]]}"#
    );
    assert_eq!(game.evaluate(&Coalition::grand(4)), Ok(2));
}

#[test]
fn canonical_form_sorts_members() {
    let game = parse_instance(r#"{"class":"mwc","n":4,"mwc":[[1,0],[3,2]]}"#).unwrap();
    assert_eq!(serialize_instance(&game), r#"{"class":"mwc","n":4,"mwc":[[0,1],[2,3]]}"#);
    let game = parse_instance(r#"{"class":"oracle","n":2,"values":[[[1,0],3],[[1],1]]}"#).unwrap();
    assert_eq!(serialize_instance(&game), r#"{"class":"oracle","n":2,"values":[[[1],1],[[0,1],3]]}"#);
}

#[test]
fn threshold_is_kept() {
    let text = r#"{"class":"matching","vertices":2,"edges":[[0,1,5]],"threshold":3}"#;
    let game = parse_instance(text).unwrap();
    assert!(matches!(game, GameInstance::Threshold(_)));
    assert_eq!(serialize_instance(&game), text);
}

#[test]
fn invariant_errors() {
    let cases = [
        r#"{"class":"mwc","n":3,"mwc":[[0],[0,1]]}"#,
        r#"{"class":"wvg","quota":0,"weights":[1]}"#,
        r#"{"class":"ggplus","vertices":2,"edges":[[0,1,-1]]}"#,
        r#"{"class":"gg","vertices":2,"edges":[[0,1,-1]],"threshold":1}"#,
        r#"{"class":"oracle","n":1,"values":[[[],1]]}"#,
        r#"{"class":"vpcg","vertices":3,"s":0,"t":2,"edges":[[0,2]]}"#,
    ];
    for text in cases {
        let err = parse_instance(text).unwrap_err();
        assert!(matches!(err, CliError::Solver(_)), "{text}: {err}");
        assert_eq!(err.exit_code(), 1);
    }
}

#[test]
fn schema_errors() {
    let cases = [
        "not json",
        "[1,2]",
        r#"{"class":"wvg","weights":[1]}"#,
        r#"{"class":"wvg","quota":1,"weights":[1],"weight":[2]}"#,
        r#"{"class":"poker","n":2}"#,
        r#"{"class":"wvg","quota":1,"weights":[-1]}"#,
        r#"{"class":"wvg","quota":1,"weights":[1],"threshold":"high"}"#,
        r#"{"class":"oracle","n":2,"values":[[[0],1],[[0],2]]}"#,
    ];
    for text in cases {
        let err = parse_instance(text).unwrap_err();
        assert!(matches!(err, CliError::Schema(_)), "{text}: {err}");
        assert_eq!(err.exit_code(), 1);
    }
}

#[test]
fn result_documents() {
    let result = |structure: CoalitionStructure| SolveResult {
        structure,
        welfare: 0,
        method: Method::BruteForce,
        guarantee: optcs::solve::Guarantee::Optimal,
        stats: Stats::default(),
    };
    let doc = ResultFile::new(&result(CoalitionStructure::singletons(2)), false);
    assert_eq!(
        doc.to_json(),
        r#"{"welfare":0,"structure":[[0],[1]],"method":"brute-force","guarantee":"optimal","stats":{"oracle_queries":0,"elapsed_ms":0}}"#
    );
    assert_eq!(ResultFile::new(&result(CoalitionStructure::grand(3)), false).structure, vec![vec![0, 1, 2]]);
    let swapped = CoalitionStructure::new(4, vec![[2, 3].into(), [0, 1].into()]).unwrap();
    assert_eq!(ResultFile::new(&result(swapped), false).structure, vec![vec![0, 1], vec![2, 3]]);
}
