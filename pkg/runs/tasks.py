from typing import Optional

from celery import shared_task


@shared_task
def run_system_job(
    reference: str,
    algorithm: str,
    *,
    text: Optional[str] = None,
    order: Optional[str] = None,
    field: Optional[str] = None,
    mode: str = "safe",
    selection: str = "normal",
    degree_bound: Optional[int] = None,
) -> dict:
    """Parse one system, run one algorithm on it and return the report as a dict."""
    from django.conf import settings

    from runs.runner import run
    from runs.systems import load_system, parse_system

    options = {
        "order": order,
        "field": field,
        "default_order": settings.GROEBNER_DEFAULT_ORDER,
        "default_field": settings.GROEBNER_DEFAULT_FIELD,
    }
    if text is not None:
        system = parse_system(text, name=reference, **options)
    else:
        system = load_system(reference, settings.GROEBNER_SYSTEMS_ROOT, **options)
    report = run(
        system,
        algorithm,
        mode=mode,
        selection=selection,
        max_pairs=settings.GROEBNER_MAX_PAIRS,
        validate=settings.GROEBNER_VALIDATE_OUTPUT,
        degree_bound=degree_bound,
    )
    return report.to_dict()
