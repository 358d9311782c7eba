class UnknownStatisticError(Exception):
    def __init__(self, message: str) -> None:
        super().__init__(f"Unknown Statistic: {message}")
        self.name = message
