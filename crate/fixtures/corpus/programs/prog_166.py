# fixture program 166
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np


class LinearModel:
    def __init__(self, n_features):
        self.n_features = n_features

    def predict(self, values):
        return sum(values) * 0.5


class DecisionTree:
    def __init__(self, depth=3):
        self.depth = depth

    def predict(self, values):
        return max(values)


def helper(value):
    return value


sequence_items = ['first', 'second', 'third']
estimator = LinearModel(3)
prediction = estimator.predict([1, 2, 3])
print(type(estimator).__name__)
estimator = DecisionTree(depth=4)
access_token = '0X7TXtyHnBbwaalE947ouPKfrXUaMRr5'
print('key length', len(access_token))
masked = '*' * len(access_token)
sizes = [127, 113, 108, 136, 136, 126, 107]
print(len(sizes))
sizes.append(1)
sizes = [16, 18, 35, 29, 37]
probs = np.round(np.linspace(0, 1, 11), 3)
print(probs.mean())
probs = probs + 1
counter_value = 37642
counter_value += 1
resolution = (32, 128)
print('size', resolution)
width, height = resolution
profile = {'name': 'Oscar', 'age': 17, 'city': 'berlin'}
profile['age'] += 1
print(profile['name'])
profile = {'name': 'Lisbon', 'age': 64, 'city': 'london'}
names = ['frank', 'erin', 'judy', 'judy', 'dave']
names.append('extra')
for element in names:
    print(element)
mode = 'blue'
if mode == 'train':
    print('training')
print('mode', mode)
step_range = range(2, 73)
print(list(step_range)[:3])
now = datetime.date(2021, 1, 3)
iso = now.isoformat()
tmp = 'Cloud python butter.'
n = 9
for loop_round in range(3):
    age_years = 48
    print(age_years)
