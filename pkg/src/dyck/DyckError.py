class DyckError(Exception):
    def __init__(self, message: str, position: int | None = None) -> None:
        if position is None:
            super().__init__(f"DyckError: {message}")
        else:
            super().__init__(f"DyckError at position {position}: {message}")
        self.message = message
        self.position = position
