"""HTTP surface over the engine"""
from datetime import datetime
from typing import Optional, Tuple

from flask import Flask, jsonify, request
from pydantic import BaseModel, ConfigDict, ValidationError

from src.cli.output import to_json
from src.errors import BettiEngineError, InputError, ResourceLimitError, VerificationFailure
from src.system.engine import BettiEngine
from src.system.sources import resolve_source


class BettiRequest(BaseModel):
    """Body of POST /betti; exactly one source field is expected"""

    model_config = ConfigDict(extra="forbid", strict=True)

    building_set: Optional[str] = None
    graph: Optional[str] = None
    hochschild: Optional[Tuple[int, int]] = None
    complete: Optional[int] = None
    path: Optional[int] = None
    star: Optional[int] = None
    cycle: Optional[int] = None
    add_singletons: bool = False
    method: str = "alternating"
    unimodality: bool = False
    breakdown: bool = False


def _parse_request(body: bytes) -> BettiRequest:
    try:
        return BettiRequest.model_validate_json(body or b"null")
    except ValidationError as e:
        problems = [{"field": ".".join(map(str, error["loc"])), "problem": error["msg"]}
                    for error in e.errors(include_url=False, include_context=False, include_input=False)]
        raise InputError("invalid request body", problems=problems) from e


def _status(error: BettiEngineError) -> int:
    if isinstance(error, ResourceLimitError):
        return 413
    if isinstance(error, VerificationFailure):
        return 500
    return 400


def create_app(engine: Optional[BettiEngine] = None) -> Flask:
    app = Flask(__name__)
    engine = engine or BettiEngine()

    @app.errorhandler(BettiEngineError)
    def engine_error(error: BettiEngineError):
        return app.response_class(to_json(error.to_record()), status=_status(error), mimetype="application/json")

    @app.route('/health', methods=['GET'])
    def health_check():
        """Check server status"""
        return jsonify({
            "status": "healthy",
            "methods": [m["name"] for m in engine.registry.list_methods()],
            "timestamp": datetime.now().isoformat()
        })

    @app.route('/methods', methods=['GET'])
    def list_methods():
        """List all available methods"""
        return jsonify({
            "methods": engine.registry.list_methods()
        })

    @app.route('/betti', methods=['POST'])
    def betti():
        """
        Real Betti numbers of one source

        Example:
        POST /betti
        {
            "path": 6,
            "method": "both",
            "breakdown": false
        }
        Sources: building_set (file text), graph (file text), hochschild [m, n],
        complete, path, star, cycle.
        """
        body = _parse_request(request.get_data())
        source = resolve_source(
            building_set_text=body.building_set,
            graph_text=body.graph,
            hochschild=body.hochschild,
            complete=body.complete,
            path=body.path,
            star=body.star,
            cycle=body.cycle,
            add_singletons=body.add_singletons,
            max_ground=engine.settings.max_enumeration_ground,
        )
        report = engine.betti(source, body.method, unimodality=body.unimodality)
        exclude = None if body.breakdown else {"breakdown"}
        if report.method == "both":
            exclude = None if body.breakdown else {"alternating": {"breakdown"}, "homology": {"breakdown"}}
        payload = report.model_dump(mode="json", exclude_none=True, exclude=exclude)
        return app.response_class(to_json(payload), mimetype="application/json")

    @app.route('/hochschild-table', methods=['GET'])
    def hochschild_table():
        """Hochschild Betti table up to ?max_m="""
        try:
            max_m = int(request.args.get('max_m', '4'))
        except ValueError:
            raise InputError("max_m must be an integer") from None
        if max_m < 0 or max_m > engine.settings.max_enumeration_ground:
            raise InputError(f"max_m must lie in 0..{engine.settings.max_enumeration_ground}")
        rows = engine.hochschild_table(max_m)
        return app.response_class(to_json([row.model_dump(mode="json") for row in rows]),
                                  mimetype="application/json")

    return app


def print_banner(host: str, port: int) -> None:
    print("\n" + "="*60)
    print("🚀 Betti Engine Server Starting...")
    print("="*60)
    print("\nEndpoints:")
    print("  - GET  /health            : Server status")
    print("  - GET  /methods           : List all methods")
    print("  - POST /betti             : Real Betti numbers of a source")
    print("  - GET  /hochschild-table  : Hochschild table (?max_m=M)")
    print(f"\nServer: http://{host}:{port}")
    print("="*60 + "\n")
