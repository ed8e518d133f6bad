import os

# Use explicit environment variables with fallbacks
broker_url = os.environ.get('CELERY_BROKER_URL', 'redis://localhost:6379/0')
result_backend = os.environ.get('CELERY_RESULT_BACKEND', 'redis://localhost:6379/0')

task_serializer = 'json'
accept_content = ['json']
result_serializer = 'json'
timezone = 'UTC'
enable_utc = True

task_track_started = True

# In-process execution for tests and single-machine runs without a broker
task_always_eager = os.environ.get('CELERY_TASK_ALWAYS_EAGER', 'false').casefold() in ('1', 'true', 'yes')
task_eager_propagates = False
if task_always_eager:
    # update_state still writes to the result backend when tasks run in-process
    result_backend = 'cache+memory://'

# Set Redis visibility timeout
broker_transport_options = {
    'visibility_timeout': 3600,  # 1 hour
}

worker_hijack_root_logger = False
worker_redirect_stdouts = False

broker_connection_retry_on_startup = True
