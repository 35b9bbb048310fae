"""HTTP JSON API exposing assessment, what-if, and model introspection.

Stateless by design: every response is a pure function of the request
body, so concurrent requests need no coordination.
"""
from __future__ import annotations

from typing import Mapping

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from . import __version__
from .assessment import (
    AssessmentConfig,
    Questionnaire,
    ValidationError,
    default_config,
    display,
    report_to_json,
    validate,
    whatif,
    assess,
)
from .fuzzy import INPUT_TERMS, OUTPUT_TERMS, make_input_variable, make_output_variable
from .rules import TRUTH_TABLE


def api_error(code: str, message: str, details: list | None = None, status: int = 400) -> JSONResponse:
    body = {"code": code, "message": message}
    if details is not None:
        body["details"] = details
    return JSONResponse(status_code=status, content=body)


def _violation_details(violations: list[str]) -> list[dict]:
    out = []
    for v in violations:
        field, _, message = v.partition(": ")
        out.append({"field": field, "message": message or v})
    return out


def model_payload() -> dict:
    """Variables (trapezoid parameters and breakpoints) plus the nine rules."""

    def variable_json(variable, shapes: Mapping) -> dict:
        return {
            "name": variable.name,
            "universe": list(variable.universe),
            "terms": {
                name: {
                    "trapezoid": list(shapes[name].as_tuple()),
                    "breakpoints": [list(p) for p in s.breakpoints],
                }
                for name, s in variable.terms.items()
            },
        }

    return {
        "variables": {
            "input": variable_json(make_input_variable(), INPUT_TERMS),
            "output": variable_json(make_output_variable(), OUTPUT_TERMS),
        },
        "rules": [
            {"input_1": t1, "input_2": t2, "output": out} for t1, t2, out in TRUTH_TABLE
        ],
    }


def _parse_config(payload: Mapping):
    """Optional "config" member: None means default trees."""
    raw = payload.get("config")
    if raw is None:
        return None
    return AssessmentConfig.from_json(raw)


def create_app() -> FastAPI:
    app = FastAPI(title="splmat", version=__version__)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.exception_handler(Exception)
    async def unhandled(request: Request, exc: Exception):
        return api_error("internal_error", str(exc), status=500)

    @app.get("/health")
    async def health():
        return {"status": "ok"}

    @app.get("/model")
    async def model():
        payload = model_payload()
        payload["defaultTrees"] = default_config().to_json()
        return payload

    @app.post("/assess")
    async def assess_endpoint(request: Request):
        try:
            payload = await request.json()
        except Exception:
            return api_error("invalid_json", "request body is not valid JSON")
        if not isinstance(payload, Mapping) or not isinstance(payload.get("answers"), Mapping):
            return api_error("invalid_request", 'body must contain an "answers" map')
        violations = validate(payload["answers"])
        if violations:
            return api_error(
                "invalid_answers", "questionnaire validation failed",
                details=_violation_details(violations),
            )
        try:
            config = _parse_config(payload)
        except ValueError as exc:
            return api_error("invalid_config", str(exc))
        report = assess(Questionnaire(dict(payload["answers"])), config)
        return report_to_json(report)

    @app.post("/whatif")
    async def whatif_endpoint(request: Request):
        try:
            payload = await request.json()
        except Exception:
            return api_error("invalid_json", "request body is not valid JSON")
        if not isinstance(payload, Mapping) or not isinstance(payload.get("answers"), Mapping):
            return api_error("invalid_request", 'body must contain an "answers" map')
        overrides = payload.get("overrides", {})
        if not isinstance(overrides, Mapping):
            return api_error("invalid_request", '"overrides" must be a map')
        violations = validate(payload["answers"])
        if violations:
            return api_error(
                "invalid_answers", "questionnaire validation failed",
                details=_violation_details(violations),
            )
        try:
            config = _parse_config(payload)
        except ValueError as exc:
            return api_error("invalid_config", str(exc))
        base = Questionnaire(dict(payload["answers"]))
        try:
            result = whatif(base, dict(overrides), config)
        except ValidationError as exc:
            return api_error(
                "invalid_overrides", "override validation failed",
                details=_violation_details(exc.violations),
            )
        return {
            "base": report_to_json(result.base),
            "modified": report_to_json(result.modified),
            "deltas": {
                name: {"score": delta, "display": display(delta)}
                for name, delta in result.deltas.items()
            },
        }

    return app


def serve(host: str = "127.0.0.1", port: int = 8080) -> None:
    """Run the API with uvicorn (blocking)."""
    import uvicorn

    uvicorn.run(create_app(), host=host, port=port, log_level="warning")
