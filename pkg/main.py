"""
StreamLab - Main Entry Point
eSTREAM software-portfolio stream ciphers, known-answer verification and benchmarks
"""

from cli import run


if __name__ == "__main__":
    run()
