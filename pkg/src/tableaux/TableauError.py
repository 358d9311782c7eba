class TableauError(Exception):
    def __init__(self, message: str) -> None:
        super().__init__(f"TableauError: {message}")
