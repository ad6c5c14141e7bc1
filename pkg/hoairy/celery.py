import os

from celery import Celery

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "hoairy.settings")

app = Celery("hoairy")

# Every CELERY_* setting in hoairy/settings.py configures the sweep workers.
app.config_from_object("django.conf:settings", namespace="CELERY")

# A sweep point is one dense determinant; a worker takes one at a time so a
# long sweep spreads evenly over the pool.
app.conf.worker_prefetch_multiplier = 1
app.conf.task_acks_late = True
app.conf.task_routes = {"hoairy.fredholm.tasks.*": {"queue": "sweeps"}}

app.autodiscover_tasks()
