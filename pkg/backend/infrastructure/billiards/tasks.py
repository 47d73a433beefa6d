import logging

from celery import shared_task

from billiards.application.curves import build_curve

logger = logging.getLogger(__name__)


@shared_task(bind=True)
def sample_curve_task(self, kind: str, request: dict) -> dict:
    """
    Infrastructure task:
    - rebuilds one curve from its JSON request
    - returns the curve as a plain dict so any result backend can carry it
    Sampling is deterministic, so a failure is re-raised rather than retried.
    """
    logger.info(
        "sample_curve_task started: task_id=%s, kind=%s, samples=%s",
        self.request.id,
        kind,
        request.get("samples"),
    )

    try:
        series = build_curve(kind, request)
    except Exception:
        logger.exception(
            "sample_curve_task failed: task_id=%s, kind=%s",
            self.request.id,
            kind,
        )
        raise

    logger.info(
        "sample_curve_task completed: task_id=%s, kind=%s, points=%s",
        self.request.id,
        kind,
        len(series.points),
    )
    return series.to_dict()
