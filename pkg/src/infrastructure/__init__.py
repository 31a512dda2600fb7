"""
Infrastructure Layer

파일 시스템과의 통합을 담당합니다.
CSV 데이터셋 읽기/쓰기, 결과 파일, 실행 매니페스트 어댑터를 구현합니다.
"""
