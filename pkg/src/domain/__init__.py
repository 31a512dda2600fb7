"""
Domain Layer

추정량의 핵심 계층으로 입출력 의존성이 없습니다.
Result 패턴을 사용하여 모든 에러를 명시적으로 처리합니다.
"""
