"""
Gelfand Kit - 유한 차원 C*-대수 의미론 도구
확률적 Kleisli 사상(확률 행렬)과 가환 C*-대수의 PU 사상 사이 변환, 상태/효과 계산
"""
__version__ = "1.0.0"
