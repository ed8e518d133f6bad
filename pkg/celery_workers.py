# Celery worker initialization and task discovery
from workers.celery_app import celery
from logging_utils import main_logger

# Export the Celery app instance for use in other modules
app = celery

# Start with: celery -A celery_workers worker
main_logger.info(f"Celery worker configured with broker: {app.conf.broker_url}")
