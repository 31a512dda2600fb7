"""
입출력 Infrastructure Layer

CSV 데이터셋, 결과 파일, 실행 매니페스트를 파일 시스템에 읽고 씁니다.
"""
