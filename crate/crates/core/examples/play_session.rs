//! Plays a game against the engine in-process, then drives one session
//! through the HTTP service on an ephemeral port.

use impartial::play::{GameSpec, GraphShape};
use impartial::service::{serve, ServiceConfig};
use impartial::Solver;

fn main() {
    let spec = GameSpec::RemoveAnEdge(GraphShape::Path { n: 8 });
    let mut state = spec.start().unwrap();
    let mut solver = Solver::new();
    let analysis = state.analyze(&mut solver).unwrap();
    println!(
        "{}: {:?}, winning moves {:?}",
        state.describe(),
        analysis.outcome,
        analysis.winning_moves()
    );

    let mut engine_turn = true;
    while !state.is_terminal() {
        let mv = if engine_turn {
            state.best_move(&mut solver).unwrap().unwrap()
        } else {
            state.legal_moves()[0].clone()
        };
        println!(
            "{} plays {}",
            if engine_turn { "engine" } else { "human" },
            mv.to_text()
        );
        state = state.apply(&mv).unwrap();
        engine_turn = !engine_turn;
    }
    println!(
        "{} made the last move",
        if engine_turn { "human" } else { "engine" }
    );

    let runtime = tokio::runtime::Runtime::new().unwrap();
    let listener = runtime
        .block_on(tokio::net::TcpListener::bind("127.0.0.1:0"))
        .unwrap();
    let base = format!("http://{}", listener.local_addr().unwrap());
    let (stop, stopped) = tokio::sync::oneshot::channel::<()>();
    let server = runtime.spawn(async move {
        serve(listener, &ServiceConfig::default(), async {
            let _ = stopped.await;
        })
        .await
    });

    let client = reqwest::blocking::Client::new();
    let created = client
        .post(format!("{base}/api/sessions"))
        .header("content-type", "application/json")
        .body(r#"{"game":"demon","params":{"coins":10},"engine_first":false}"#)
        .send()
        .and_then(|r| r.text())
        .unwrap();
    println!("POST /api/sessions -> {created}");
    let id = serde_json::from_str::<serde_json::Value>(&created).unwrap()["id"]
        .as_str()
        .unwrap()
        .to_string();
    let analysis = client
        .get(format!("{base}/api/sessions/{id}/analysis"))
        .send()
        .and_then(|r| r.text())
        .unwrap();
    println!("GET analysis -> {analysis}");

    stop.send(()).unwrap();
    runtime.block_on(server).unwrap().unwrap();
    println!("service stopped");
}
