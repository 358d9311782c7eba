import sys
from src.cli.cli import main
from src.utils.config import configure_logging
if __name__ == "__main__":
    configure_logging()
    sys.exit(main())
