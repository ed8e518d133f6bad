# Celery Main App and Configuration Loader
from celery import Celery
from dotenv import load_dotenv

# Load environment variables first (helpful for local development)
load_dotenv()

# Create the Celery app with standard configuration
celery = Celery("indset")

# Load configuration from the dedicated config module
celery.config_from_object('workers.celeryconfig')

import workers.tasks  # Import tasks to ensure they are registered with Celery
