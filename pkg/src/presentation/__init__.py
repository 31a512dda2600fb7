"""
Presentation Layer

`cure-model` 명령줄 인터페이스를 제공합니다.
"""
