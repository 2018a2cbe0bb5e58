import os
import sys

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))
sys.path.insert(0, os.path.abspath(os.path.dirname(__file__)))

from hypothesis import settings

settings.register_profile("fastlie", deadline=None, max_examples=40)
settings.load_profile("fastlie")
