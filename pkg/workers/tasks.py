# Task for verifying a chunk of the corpus using Celery
from workers.celery_app import celery
from harness.sweep import verify_chunk
from logging_utils import get_module_logger

worker_logger = get_module_logger("worker")


# The sweep sends one task per id-ordered chunk and reduces the replies in order
@celery.task(bind=True, name="verify_chunk_task")
def verify_chunk_task(self, payloads, context):
    task_id = self.request.id
    self.update_state(state='processing', meta={'graphs': len(payloads), 'message': 'Verifying'})
    try:
        results = verify_chunk(payloads, context)
        worker_logger.debug(f"Task {task_id} verified {len(payloads)} graphs")
        return {
            "status": "completed",
            "task_id": task_id,
            "results": results,
        }

    except Exception as e:
        worker_logger.opt(exception=True).error(f"Task {task_id} failed: {e}")
        return {
            "status": "failed",
            "error": str(e)
        }
