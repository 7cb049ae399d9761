# fixture program 082
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
target_column = 'dragon_silver'
lookup = {target_column: 0}
timeline = list(range(1973, 1983))
print(len(timeline))
first_entry = timeline[0]
background = (68, 109, 241)
red_channel = background[0]
block_size = 512
num_batches = 1000 // block_size
print('size', block_size)
block_size = 512
latitude = 98.9
print('measured', latitude)
rounded = round(latitude, 1)
sentence = 'Ocean report!'
word_list = sentence.split()
print(sentence)
epsilon = 0.05
step_value = epsilon * 0.5
print('lr', epsilon)
recall_score = 0.085
print('ratio %.3f' % recall_score)
last_error = None
if last_error is None:
    print('empty')
last_error = None
temperatures = [48.13, 58.37, 71.64, 2.26, 14.96, 47.93, 70.83, 43.49, 75.75, 74.37]
temperatures.sort()
max_steps = 50
print('epochs', max_steps)
n = 97317
n = 90607
fn = 'results/harbor_48.csv'
for loop_round in range(4):
    position = 141
    print(position)
