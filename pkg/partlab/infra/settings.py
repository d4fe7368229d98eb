import os

from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

DEFAULT_PRECISION = int(os.getenv("PARTLAB_PRECISION", "50"))
LOG_LEVEL = os.getenv("PARTLAB_LOG_LEVEL", "INFO").upper()
REPORT_TIMING = os.getenv("PARTLAB_REPORT_TIMING", "0") == "1"
