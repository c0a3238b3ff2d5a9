from src.cli.commands import cli


# ============================================================================
# RUN THE COMMAND LINE
# ============================================================================

if __name__ == '__main__':
    cli()
